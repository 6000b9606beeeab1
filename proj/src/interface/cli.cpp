#include <algorithm>
#include <iostream>

#include "CLI11.hpp"
#include "xel/interface.hpp"

namespace xel {

using nlohmann::json;

namespace {

void print_error(std::ostream& err, const std::string& code,
                 const std::string& message) {
  err << json{{"code", code}, {"message", message}}.dump() << '\n';
}

void emit(const std::string& output, std::string_view bytes,
          std::ostream& out) {
  if (output.empty() || output == "-")
    out << bytes;
  else
    write_file(output, bytes);
}

Granularity granularity_of(const std::string& text) {
  return parse_granularity(text).value_or(Granularity::kActivity);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"xel - extended event log toolkit", "xel"};
  app.require_subcommand(1);

  std::string file;
  std::string output;
  std::string granularity = "activity";
  std::string format = "json";
  std::string from;
  std::string case_id;
  std::string host = "127.0.0.1";
  std::string ui_dir;
  int port = 8080;
  bool lenient = false;
  const auto granularity_check = CLI::IsMember({"activity", "step"});

  auto* validate_cmd = app.add_subcommand("validate", "Validate a XEL file");
  validate_cmd->add_option("file", file, "XEL file")->required();
  validate_cmd->add_flag("--lenient", lenient,
                         "Skip unknown elements/attributes with a warning");

  auto* convert_cmd = app.add_subcommand("convert", "Convert XES to XEL");
  convert_cmd->add_option("--from", from, "Input format")
      ->required()
      ->check(CLI::IsMember({"xes"}));
  convert_cmd->add_option("input", file, "Input file")->required();
  convert_cmd->add_option("-o,--output", output, "Output XEL file")
      ->required();

  auto* flatten_cmd = app.add_subcommand("flatten", "Export a flat CSV");
  flatten_cmd->add_option("file", file, "XEL file")->required();
  flatten_cmd->add_option("--granularity", granularity)
      ->check(granularity_check);
  flatten_cmd->add_option("-o,--output", output, "Output CSV (default stdout)");
  flatten_cmd->add_flag("--lenient", lenient);

  auto* discover_cmd =
      app.add_subcommand("discover", "Mine a Petri net with the alpha miner");
  discover_cmd->add_option("file", file, "XEL file")->required();
  discover_cmd->add_option("--granularity", granularity)
      ->check(granularity_check);
  discover_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "json"}));
  discover_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  discover_cmd->add_flag("--lenient", lenient);

  auto* replay_cmd =
      app.add_subcommand("replay", "Replay one case on the mined net");
  replay_cmd->add_option("file", file, "XEL file")->required();
  replay_cmd->add_option("--case", case_id, "Case id")->required();
  replay_cmd->add_option("--granularity", granularity)
      ->check(granularity_check);
  replay_cmd->add_flag("--lenient", lenient);

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
  serve_cmd->add_option("file", file, "XEL file")->required();
  serve_cmd->add_option("--port", port, "TCP port (0 = any free port)")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--ui", ui_dir, "Directory with viewer assets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "USAGE", e.what());
    return 2;
  }

  const ParseOptions parse_options{lenient};
  try {
    if (validate_cmd->parsed()) {
      try {
        ParsedLog parsed = parse_xel(read_file(file), parse_options);
        ValidationReport report;
        report.warnings = parsed.warnings;
        out << report_to_json(report).dump(2) << '\n';
        return 0;
      } catch (const ValidationFailed& e) {
        out << report_to_json(e.report()).dump(2) << '\n';
        print_error(err, e.code(), e.what());
        return 1;
      }
    }

    if (convert_cmd->parsed()) {
      XelLog log = import_xes(read_file(file));
      write_file(output, write_xel(log));
      return 0;
    }

    if (flatten_cmd->parsed()) {
      XelLog log = parse_xel(read_file(file), parse_options).log;
      emit(output, export_csv(log, granularity_of(granularity)), out);
      return 0;
    }

    if (discover_cmd->parsed()) {
      XelLog log = parse_xel(read_file(file), parse_options).log;
      MinedModel mined = mine(log, granularity_of(granularity));
      for (const auto& warning : mined.net.warnings)
        err << json{{"warning", warning}}.dump() << '\n';
      emit(output,
           format == "dot" ? export_dot(mined.net, mined.traces)
                           : mined.net_json.dump(2) + "\n",
           out);
      return 0;
    }

    if (replay_cmd->parsed()) {
      XelLog log = parse_xel(read_file(file), parse_options).log;
      MinedModel mined = mine(log, granularity_of(granularity));
      Route route = replay_case(mined.net, mined.traces, case_id);
      out << route_to_json(route).dump(2) << '\n';
      return 0;
    }

    if (serve_cmd->parsed()) {
      auto service = LogService::load(file);
      HttpServer server(*service, {host, port, ui_dir});
      bool ok = server.run([&](int bound) {
        out << "listening on http://" << host << ':' << bound << std::endl;
      });
      if (!ok) {
        print_error(err, "BIND_FAILED",
                    "cannot listen on " + host + ":" + std::to_string(port));
        return 1;
      }
      return 0;
    }
  } catch (const ValidationFailed& e) {
    print_error(err, e.code(), e.what());
    return 1;
  } catch (const Error& e) {
    print_error(err, e.code(), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(err, "INTERNAL", e.what());
    return 1;
  }
  return 0;
}

}  // namespace xel
