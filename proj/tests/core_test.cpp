#include <random>
#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "xel/core.hpp"

using namespace xel;

namespace {

Timestamp at(const char* text) { return *parse_timestamp(text); }

// One process, activities A (steps S2 ordinal 2 listed before S1 ordinal 1)
// and B (no steps), one user object, one case with two events.
XelLog small_log() {
  XelLog log;
  log.meta.processes.push_back(
      {"P", "Process",
       {{"A", "Activity A", {{"S2", "Second", 2}, {"S1", "First", 1}}},
        {"B", "Activity B", {}}},
       {{"User", "User"}}});
  log.objects.push_back({"O1", "User", {{"name", "Alice"}}});
  Event a{"E1", "A", at("2024-01-02T03:00:00Z"), at("2024-01-02T04:00:00Z"),
          {{"SI2", "S2", at("2024-01-02T03:30:00Z"), {}},
           {"SI1", "S1", at("2024-01-02T03:10:00Z"), {{"O1", "performer"}}}}};
  Event b{"E2", "B", at("2024-01-02T05:00:00Z"), at("2024-01-02T05:00:00Z"), {}};
  log.cases.push_back({"K1", "P", {a, b}});
  return log;
}

bool has_code(const std::vector<Finding>& findings, const std::string& code,
              const std::string& element) {
  for (const auto& f : findings)
    if (f.code == code && f.element == element) return true;
  return false;
}

}  // namespace

TEST_CASE("timestamps normalize offsets and keep milliseconds") {
  CHECK(format_timestamp(at("2024-01-02T03:04:05Z")) == "2024-01-02T03:04:05Z");
  CHECK(format_timestamp(at("2024-01-02T03:04:05.120Z")) ==
        "2024-01-02T03:04:05.120Z");
  CHECK(format_timestamp(at("2024-01-02T03:04:05+02:00")) ==
        "2024-01-02T01:04:05Z");
  CHECK(format_timestamp(at("2024-01-01T23:30:00-0130")) ==
        "2024-01-02T01:00:00Z");
  CHECK(format_timestamp(at("2024-01-02T03:04:05.123456Z")) ==
        "2024-01-02T03:04:05.123Z");
  CHECK(at("2024-01-02T03:04:05") == at("2024-01-02T03:04:05Z"));
  CHECK(at("1970-01-01T00:00:00Z").time_since_epoch().count() == 0);

  CHECK_FALSE(parse_timestamp("2024-02-30T00:00:00Z"));
  CHECK_FALSE(parse_timestamp("2024-01-02 03:04:05Z"));
  CHECK_FALSE(parse_timestamp("2024-01-02T24:00:00Z"));
  CHECK_FALSE(parse_timestamp("2024-01-02T03:04:05.Z"));
  CHECK_FALSE(parse_timestamp("2024-01-02T03:04:05Zjunk"));
  CHECK_FALSE(parse_timestamp(""));
}

TEST_CASE("timestamp format and parse are inverse on random instants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> ms(-5'000'000'000'000LL,
                                              5'000'000'000'000LL);
  for (int k = 0; k < 2000; ++k) {
    Timestamp ts{std::chrono::milliseconds{ms(rng)}};
    auto back = parse_timestamp(format_timestamp(ts));
    REQUIRE(back);
    CHECK(*back == ts);
  }
}

TEST_CASE("validate: well-formed log has no findings") {
  auto report = validate(small_log());
  CHECK(report.errors.empty());
  CHECK(report.warnings.empty());
}

TEST_CASE("validate: dangling activity reference") {
  XelLog log = small_log();
  log.cases[0].events[1].activity_ref = "A9";
  auto report = validate(log);
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].code == "DANGLING_ACTIVITY_REF");
  CHECK(report.errors[0].element == "A9");
  CHECK(report.errors[0].message.find("A9") != std::string::npos);
}

TEST_CASE("validate: step before its event is only a warning") {
  XelLog log = small_log();
  log.cases[0].events[0].step_instances[0].timestamp = at("2024-01-02T02:59:59Z");
  auto report = validate(log);
  CHECK(report.errors.empty());
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].code == "STEP_OUTSIDE_EVENT_WINDOW");
  CHECK(report.warnings[0].element == "SI2");
}

TEST_CASE("validate: error catalogue") {
  SUBCASE("duplicate meta id across kinds") {
    XelLog log = small_log();
    log.meta.processes[0].object_classes.push_back({"S1", "clash"});
    CHECK(has_code(validate(log).errors, "DUPLICATE_ID", "S1"));
  }
  SUBCASE("ids with whitespace") {
    XelLog log = small_log();
    log.cases[0].id = "K 1";
    CHECK(has_code(validate(log).errors, "INVALID_ID", "K 1"));
  }
  SUBCASE("ordinal gaps and non-positive ordinals") {
    XelLog log = small_log();
    log.meta.processes[0].activities[0].steps[0].ordinal = 3;
    CHECK(has_code(validate(log).errors, "STEP_ORDINALS_NOT_CONTIGUOUS", "A"));
    log.meta.processes[0].activities[0].steps[0].ordinal = 0;
    CHECK(has_code(validate(log).errors, "STEP_ORDINAL_INVALID", "S2"));
  }
  SUBCASE("event interval reversed") {
    XelLog log = small_log();
    std::swap(log.cases[0].events[0].start, log.cases[0].events[0].end);
    CHECK(has_code(validate(log).errors, "EVENT_INTERVAL_INVALID", "E1"));
  }
  SUBCASE("step of another activity") {
    XelLog log = small_log();
    log.meta.processes[0].activities[1].steps.push_back({"SB", "B step", 1});
    log.cases[0].events[0].step_instances[0].step_ref = "SB";
    CHECK(has_code(validate(log).errors, "STEP_ACTIVITY_MISMATCH", "SB"));
  }
  SUBCASE("unknown step") {
    XelLog log = small_log();
    log.cases[0].events[0].step_instances[0].step_ref = "nope";
    CHECK(has_code(validate(log).errors, "DANGLING_STEP_REF", "nope"));
  }
  SUBCASE("same step twice in one event") {
    XelLog log = small_log();
    log.cases[0].events[0].step_instances[0].step_ref = "S1";
    CHECK(has_code(validate(log).errors, "DUPLICATE_STEP_INSTANCE", "SI1"));
  }
  SUBCASE("dangling object and class refs") {
    XelLog log = small_log();
    log.cases[0].events[0].step_instances[1].object_refs[0].object_id = "O9";
    log.objects[0].class_ref = "Ghost";
    auto report = validate(log);
    CHECK(has_code(report.errors, "DANGLING_OBJECT_REF", "O9"));
    CHECK(has_code(report.errors, "DANGLING_CLASS_REF", "Ghost"));
    CHECK(has_code(report.warnings, "UNREFERENCED_OBJECT", "O1"));
  }
  SUBCASE("activity of a different process") {
    XelLog log = small_log();
    log.meta.processes.push_back({"P2", "Other", {{"X", "X", {}}}, {}});
    log.cases[0].events[1].activity_ref = "X";
    CHECK(has_code(validate(log).errors, "ACTIVITY_PROCESS_MISMATCH", "X"));
  }
  SUBCASE("unknown process and duplicate case") {
    XelLog log = small_log();
    log.cases.push_back({"K1", "Nope", {}});
    auto report = validate(log);
    CHECK(has_code(report.errors, "DANGLING_PROCESS_REF", "Nope"));
    CHECK(has_code(report.errors, "DUPLICATE_ID", "K1"));
  }
  SUBCASE("empty process warns") {
    XelLog log = small_log();
    log.meta.processes.push_back({"P2", "Empty", {}, {}});
    auto report = validate(log);
    CHECK(report.errors.empty());
    CHECK(has_code(report.warnings, "EMPTY_PROCESS", "P2"));
  }
}

TEST_CASE("require_valid throws with the first error code") {
  XelLog log = small_log();
  log.cases[0].events[1].activity_ref = "A9";
  try {
    require_valid(log);
    FAIL("expected ValidationFailed");
  } catch (const ValidationFailed& e) {
    CHECK(e.code() == "DANGLING_ACTIVITY_REF");
    CHECK(e.report().errors.size() == 1);
  }
}

TEST_CASE("project_classic orders by start then document order") {
  XelLog log = small_log();
  auto rows = project_classic(log);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == ClassicRow{"K1", "Activity A", at("2024-01-02T03:00:00Z"),
                              at("2024-01-02T04:00:00Z")});
  CHECK(rows[1].activity_name == "Activity B");

  // B before A in time although listed second.
  log.cases[0].events[1].start = log.cases[0].events[1].end =
      at("2024-01-02T01:00:00Z");
  rows = project_classic(log);
  CHECK(rows[0].activity_name == "Activity B");

  // Identical starts: document order wins.
  log.cases[0].events[1].start = log.cases[0].events[0].start;
  log.cases[0].events[1].end = log.cases[0].events[0].start;
  rows = project_classic(log);
  CHECK(rows[0].activity_name == "Activity A");
  CHECK(rows[1].activity_name == "Activity B");

  CHECK(project_classic(XelLog{}).empty());

  log.cases[0].events[0].activity_ref = "A9";
  CHECK_THROWS_AS(project_classic(log), ValidationFailed);
}

TEST_CASE("steps_of_activity sorts by ordinal") {
  XelLog log = small_log();
  auto steps = steps_of_activity(log, "A");
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].id == "S1");
  CHECK(steps[1].id == "S2");
  CHECK(steps_of_activity(log, "B").empty());
  try {
    steps_of_activity(log, "ZZZ");
    FAIL("expected NotFoundError");
  } catch (const NotFoundError& e) {
    CHECK(e.id() == "ZZZ");
    CHECK(e.code() == "NOT_FOUND");
  }
}

TEST_CASE("detail_of_event joins steps with business objects") {
  XelLog log = small_log();
  EventDetail detail = detail_of_event(log, "E1");
  CHECK(detail.case_id == "K1");
  CHECK(detail.activity.id == "A");
  REQUIRE(detail.steps.size() == 2);
  CHECK(detail.steps[0].step.id == "S1");  // ordinal order, not file order
  REQUIRE(detail.steps[0].objects.size() == 1);
  const ResolvedObject& o = detail.steps[0].objects[0];
  CHECK(o.object.id == "O1");
  CHECK(o.object_class.name == "User");
  CHECK(o.role == "performer");
  CHECK(o.object.attributes.at("name") == "Alice");
  CHECK(detail.steps[1].objects.empty());

  CHECK(detail_of_event(log, "E2").steps.empty());
  CHECK_THROWS_AS(detail_of_event(log, "E404"), NotFoundError);
}

TEST_CASE("properties over random valid logs") {
  std::mt19937 rng(20240101);
  for (int k = 0; k < 200; ++k) {
    XelLog log = testing::random_log(rng);
    auto report = validate(log);
    REQUIRE_MESSAGE(report.ok(), report.errors.front().message);

    LogCounts counts = count_elements(log);
    CHECK(project_classic(log).size() == counts.events);

    std::multiset<std::string> object_ids;
    for (const auto& o : log.objects) object_ids.insert(o.id);
    for (const auto& id : object_ids) CHECK(object_ids.count(id) == 1);

    for (const auto& process : log.meta.processes) {
      for (const auto& activity : process.activities) {
        auto steps = steps_of_activity(log, activity.id);
        for (std::size_t s = 1; s < steps.size(); ++s)
          CHECK(steps[s - 1].ordinal < steps[s].ordinal);
      }
    }
    // Referential closure: every dereference succeeds.
    for (const auto& c : log.cases)
      for (const auto& e : c.events) CHECK_NOTHROW(detail_of_event(log, e.id));
  }
}
