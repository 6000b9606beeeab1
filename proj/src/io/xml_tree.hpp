#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xel::detail {

/// Minimal element tree built from expat callbacks. Comments, processing
/// instructions and the doctype are dropped.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;  ///< concatenated character data directly inside
  long line = 0;
  long column = 0;

  const std::string* attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes)
      if (k == key) return &v;
    return nullptr;
  }
};

/// Throws XmlSyntaxError.
XmlElement parse_xml(std::string_view bytes);

}  // namespace xel::detail
