// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "support/dot_grammar.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "xel/interface.hpp"

using namespace xel;

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1))
    ++count;
  return count;
}

XelLog load_fixture(std::string* bytes = nullptr) {
  std::string text = read_file(testing::fixture_path("sample-order.xel"));
  if (bytes) *bytes = text;
  return parse_xel(text).log;
}

void feature_suite() {
  std::string bytes;
  XelLog log = load_fixture(&bytes);
  LogService service(log);

  // (a) cases present and queryable
  expect(log.cases.size() == 2, "fixture has two cases");
  auto cases = service.handle({"GET", "/api/cases", {}});
  expect(cases.status == 200 && cases.body.size() == 2, "/api/cases lists both");
  for (const auto& c : log.cases) {
    expect(find_case(log, c.id) == &c, "case " + c.id + " found by id");
    auto route = service.handle({"GET", "/api/cases/" + c.id + "/route", {}});
    expect(route.status == 200, "route of " + c.id);
  }

  // (b) business objects resolve from step instances
  std::size_t resolved = 0;
  for (const auto& c : log.cases) {
    for (const auto& e : c.events) {
      EventDetail detail = detail_of_event(log, e.id);
      expect(detail.steps.size() == e.step_instances.size(),
             "every step instance of " + e.id + " resolved");
      for (const auto& step : detail.steps) {
        expect(step.objects.size() == step.instance.object_refs.size(),
               "every object of " + step.instance.id + " resolved");
        for (std::size_t k = 0; k < step.objects.size(); ++k) {
          const ResolvedObject& o = step.objects[k];
          expect(o.object.id == step.instance.object_refs[k].object_id &&
                     o.object_class.id == o.object.class_ref,
                 "object " + o.object.id + " resolves with its class");
          ++resolved;
        }
      }
    }
  }
  expect(resolved > 0, "fixture references objects");
  auto event = service.handle({"GET", "/api/events/K1-E1", {}});
  expect(event.body["steps"][0]["objects"][0]["className"] == "User",
         "event endpoint resolves the performer");

  // (c) each StepDef and BusinessObject stored exactly once
  std::map<std::string, std::size_t> step_refs, object_refs;
  for (const auto& c : log.cases)
    for (const auto& e : c.events)
      for (const auto& si : e.step_instances) {
        ++step_refs[si.step_ref];
        for (const auto& r : si.object_refs) ++object_refs[r.object_id];
      }
  bool shared = false;
  for (const auto& p : log.meta.processes)
    for (const auto& a : p.activities)
      for (const auto& s : a.steps) {
        expect(occurrences(bytes, "<step id=\"" + s.id + "\"") == 1,
               "step " + s.id + " defined once");
        shared = shared || step_refs[s.id] > 1;
      }
  for (const auto& o : log.objects) {
    expect(occurrences(bytes, "<object id=\"" + o.id + "\"") == 1,
           "object " + o.id + " stored once");
    shared = shared || object_refs[o.id] > 1;
  }
  expect(shared, "definitions are referenced more than once");
  expect(write_xel(log) == bytes, "writer keeps one copy per definition");

  // (d) two granularities, two nets
  MinedModel activity = mine(log, Granularity::kActivity);
  MinedModel step = mine(log, Granularity::kStep);
  expect(activity.net_json != step.net_json, "nets differ");
  expect(step.net.transitions.size() > activity.net.transitions.size(),
         "step net has more transitions (" +
             std::to_string(step.net.transitions.size()) + " vs " +
             std::to_string(activity.net.transitions.size()) + ")");

  // (e) DOT grammar
  for (const MinedModel* m : {&activity, &step}) {
    try {
      testing::DotGraph graph = testing::parse_dot(export_dot(m->net, m->traces));
      expect(graph.directed, "DOT is a digraph");
      expect(graph.nodes.size() == m->net.places.size() + m->net.transitions.size(),
             "DOT has one node per place and transition");
      expect(graph.edges.size() == m->net.arcs.size(), "DOT has one edge per arc");
    } catch (const testing::DotSyntaxError& e) {
      throw Failure{std::string("DOT grammar: ") + e.what()};
    }
  }
}

void footprint_oracle() {
  std::mt19937 rng(20240610);
  for (int k = 0; k < 200; ++k) {
    testing::Sequences log = testing::random_sequences(rng, 6, 50, 8);
    Footprint fp = footprint(TraceLog::from_sequences(log));
    expect(fp.alphabet() == testing::brute_alphabet(log),
           "alphabet of log " + std::to_string(k));
    for (const auto& a : fp.alphabet())
      for (const auto& b : fp.alphabet())
        expect(symbol(fp.relation(a, b)) == testing::brute_relation(log, a, b),
               "relation " + a + "," + b + " in log " + std::to_string(k));
  }
}

void alpha_golden() {
  using testing::NetShape;
  using testing::PlaceKey;

  struct Golden {
    std::string name;
    testing::Sequences log;
    std::set<PlaceKey> inner;
  };
  testing::Sequences parallel;
  for (int k = 0; k < 3; ++k) parallel.push_back({"a", "b", "c", "d"});
  for (int k = 0; k < 2; ++k) parallel.push_back({"a", "c", "b", "d"});
  const std::vector<Golden> goldens = {
      {"singleton", {{"a"}}, {}},
      {"choice",
       {{"a", "b", "d"}, {"a", "c", "d"}},
       {{{"a"}, {"b", "c"}}, {{"b", "c"}, {"d"}}}},
      {"parallel",
       parallel,
       {{{"a"}, {"b"}}, {{"a"}, {"c"}}, {{"b"}, {"d"}}, {{"c"}, {"d"}}}},
  };
  for (const auto& g : goldens) {
    NetShape oracle = testing::alpha_by_subset_enumeration(g.log);
    PetriNet net = alpha_miner(TraceLog::from_sequences(g.log));
    expect(testing::shape_of(net) == oracle,
           g.name + ": miner equals subset enumeration");
    expect(oracle.places == g.inner, g.name + ": expected inner places");
    expect(net.places.size() == g.inner.size() + 2 &&
               net.places.front().kind == PlaceKind::kSource &&
               net.places.back().kind == PlaceKind::kSink,
           g.name + ": one source and one sink");
  }
  NetShape single = testing::shape_of(alpha_miner(TraceLog::from_sequences({{"a"}})));
  expect(single.arcs == std::set<std::pair<std::string, std::string>>{
                            {"i", "a"}, {"a", "o"}},
         "singleton arcs are i->a, a->o");
}

void round_trip() {
  std::vector<XelLog> logs{load_fixture()};
  std::mt19937 rng(424242);
  for (int k = 0; k < 100; ++k) logs.push_back(testing::random_log(rng));
  for (std::size_t k = 0; k < logs.size(); ++k) {
    std::string bytes = write_xel(logs[k]);
    expect(write_xel(logs[k]) == bytes, "write is deterministic for log " + std::to_string(k));
    XelLog back = parse_xel(bytes).log;
    expect(back == logs[k], "parse(write(L)) == L for log " + std::to_string(k));
    expect(write_xel(back) == bytes, "rewrite is byte-identical for log " + std::to_string(k));
  }
}

void xes_fidelity() {
  std::mt19937 rng(31337);
  std::string xes = testing::random_xes(rng, 20);
  std::vector<testing::XesTriple> scanned = testing::scan_xes(xes);
  XelLog log = import_xes(xes);
  expect(log.cases.size() == 20, "20 traces imported");
  expect(count_elements(log).events == scanned.size(),
         "event count " + std::to_string(count_elements(log).events) + " vs " +
             std::to_string(scanned.size()));
  std::vector<ClassicRow> rows = project_classic(log);
  expect(rows.size() == scanned.size(), "classic row count");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& want = scanned[r];
    expect(rows[r].case_id == want.trace && rows[r].activity_name == want.name &&
               rows[r].start.time_since_epoch().count() == want.epoch_ms,
           "row " + std::to_string(r) + " equals the XES scan");
  }
}

void replay_completeness() {
  XelLog log = load_fixture();
  TraceLog traces = build_traces(log, Granularity::kActivity);
  PetriNet net = alpha_miner(traces);
  ReplaySummary summary = replay_all(net, traces);
  expect(summary.fitting_fraction == 1.0,
         "fitting fraction " + std::to_string(summary.fitting_fraction));
  expect(summary.routes.size() == log.cases.size(), "one route per case");
  for (const auto& route : summary.routes) {
    expect(route.deviations.empty(), route.case_id + " has no deviations");
    expect(route.complete, route.case_id + " is complete");
  }
}

std::string synthetic_bytes;

void performance() {
  XelLog log = parse_xel(synthetic_bytes).log;  // validates as it parses
  expect(count_elements(log).events == 10'000, "10,000 events");
  expect(validate(log).ok(), "synthetic log is valid");
  for (Granularity g : {Granularity::kActivity, Granularity::kStep}) {
    TraceLog traces = build_traces(log, g);
    PetriNet net = alpha_miner(traces);
    Dfg graph = dfg(traces);
    expect(!net.transitions.empty() && !graph.edges.empty(), "mined a net");
  }
}

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = no limit
  std::function<void()> run;
};

}  // namespace

int main() {
  {
    std::mt19937 rng(2024);
    synthetic_bytes = write_xel(testing::synthetic_log(rng, 10'000, 15));
  }

  const std::vector<Criterion> criteria = {
      {"feature-suite", 5, feature_suite},
      {"footprint-oracle-equivalence", 30, footprint_oracle},
      {"alpha-golden-nets", 0, alpha_golden},
      {"round-trip-law", 0, round_trip},
      {"xes-import-fidelity", 0, xes_fidelity},
      {"replay-completeness", 0, replay_completeness},
      {"performance-10k-events", 10, performance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      ok = false;
      detail = "over the time limit";
    }
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", seconds, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << " (" << timing << ")";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
