#include "xml_tree.hpp"

#include <expat.h>

#include <algorithm>
#include <memory>

#include "xel/io.hpp"

namespace xel::detail {

namespace {

struct BuildState {
  XML_Parser parser = nullptr;
  XmlElement root;
  bool has_root = false;
  std::vector<XmlElement*> open;
};

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** atts) {
  auto* state = static_cast<BuildState*>(user);
  XmlElement element;
  element.name = name;
  for (int k = 0; atts[k] != nullptr; k += 2)
    element.attributes.emplace_back(atts[k], atts[k + 1]);
  element.line = static_cast<long>(XML_GetCurrentLineNumber(state->parser));
  element.column =
      static_cast<long>(XML_GetCurrentColumnNumber(state->parser)) + 1;

  if (state->open.empty()) {
    state->root = std::move(element);
    state->has_root = true;
    state->open.push_back(&state->root);
  } else {
    auto& siblings = state->open.back()->children;
    siblings.push_back(std::move(element));
    state->open.push_back(&siblings.back());
  }
}

void XMLCALL on_end(void* user, const XML_Char*) {
  static_cast<BuildState*>(user)->open.pop_back();
}

void XMLCALL on_text(void* user, const XML_Char* text, int length) {
  auto* state = static_cast<BuildState*>(user);
  if (!state->open.empty())
    state->open.back()->text.append(text, static_cast<std::size_t>(length));
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* parser) const { XML_ParserFree(parser); }
};

}  // namespace

XmlElement parse_xml(std::string_view bytes) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw Error("XML_SYNTAX", "cannot allocate XML parser");

  BuildState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  // Feed in chunks so documents larger than INT_MAX bytes still parse.
  constexpr std::size_t kChunk = 1 << 20;
  std::size_t offset = 0;
  do {
    std::size_t len = std::min(kChunk, bytes.size() - offset);
    bool final = offset + len == bytes.size();
    if (XML_Parse(parser.get(), bytes.data() + offset, static_cast<int>(len),
                  final ? XML_TRUE : XML_FALSE) == XML_STATUS_ERROR) {
      throw XmlSyntaxError(
          XML_ErrorString(XML_GetErrorCode(parser.get())),
          static_cast<long>(XML_GetCurrentLineNumber(parser.get())),
          static_cast<long>(XML_GetCurrentColumnNumber(parser.get())) + 1);
    }
    offset += len;
  } while (offset < bytes.size());

  if (!state.has_root) throw XmlSyntaxError("no root element", 1, 1);
  return std::move(state.root);
}

}  // namespace xel::detail
