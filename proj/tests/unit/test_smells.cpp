#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fdebt/errors.hpp"
#include "fdebt/smells.hpp"
#include "java_gen.hpp"
#include "properties.hpp"
#include "test_support.hpp"

using namespace fdebt;
using namespace fdebt::testing;

namespace {

constexpr int kCases = 200;

const char* const kSmellDirs[] = {"long_method", "conditional_complexity", "brain_method",
                                  "feature_envy", "data_class",           "god_class",
                                  "brain_class"};

std::set<std::string> keys_of(const std::vector<SmellFinding>& findings) {
  std::set<std::string> out;
  for (const SmellFinding& f : findings) out.insert(finding_key(f));
  return out;
}

std::set<std::string> json_set(const nlohmann::json& a) {
  return a.get<std::set<std::string>>();
}

MetricVector method_vector(double mloc, double cyclo, double nest, double noav, double atfd,
                           double laa, double fdp) {
  MetricVector mv;
  mv.scope = MetricScope::kMethod;
  mv.key = "p.A#m()";
  mv.file = "p/A.java";
  mv.values = {{"MLOC", mloc}, {"CYCLO", cyclo}, {"MAXNESTING", nest}, {"NOAV", noav},
               {"NOP", 0},     {"ATFD_m", atfd}, {"FDP", fdp},         {"LAA", laa},
               {"FANOUT", 0}};
  return mv;
}

MetricVector class_vector(double atfd, double wmc, double tcc, double cloc, double woc,
                          double nopa, double noam) {
  MetricVector cv;
  cv.scope = MetricScope::kClass;
  cv.key = "p.A";
  cv.file = "p/A.java";
  cv.values = {{"CLOC", cloc}, {"WMC", wmc},   {"NOM", 1},   {"NOA", 0},
               {"NOPA", nopa}, {"NOAM", noam}, {"TCC", tcc}, {"WOC", woc},
               {"AMW", wmc},   {"ATFD_c", atfd}};
  return cv;
}

std::set<SmellType> types_of(const std::vector<SmellFinding>& findings) {
  std::set<SmellType> out;
  for (const SmellFinding& f : findings) out.insert(f.type);
  return out;
}

SmellFinding brain_method_in(const std::string& cls) {
  SmellFinding f;
  f.type = SmellType::kBrainMethod;
  static int serial = 0;
  f.entity_key = cls + "#m" + std::to_string(++serial) + "()";
  return f;
}

/// Moves one term of `t` in its tightening direction.
Thresholds tighten(Thresholds t, const ThresholdTerm& term, double factor) {
  double& v = t.*(term.member);
  v = term.bound == Bound::kFloor ? v * factor + 1 : v / factor;
  return t;
}

/// Checks the monotonicity contract between the findings at `loose` and
/// at a tightened `tight`; returns a description of the first violation.
std::string monotonicity_violation(const std::vector<SmellFinding>& loose,
                                   const std::vector<SmellFinding>& tight) {
  if (tight.size() > loose.size()) return "finding count grew";
  std::set<std::string> before = keys_of(loose);
  for (const SmellFinding& f : tight) {
    if (before.count(finding_key(f))) continue;
    SmellFinding god = f;
    god.type = SmellType::kGodClass;
    if (f.type == SmellType::kBrainClass && before.count(finding_key(god))) continue;
    return "new finding " + finding_key(f);
  }
  return {};
}

}  // namespace

TEST(SmellTypes, NamesRoundTrip) {
  EXPECT_EQ(all_smell_types().size(), 7u);
  for (SmellType t : all_smell_types()) EXPECT_EQ(smell_type_from_string(to_string(t)), t);
  EXPECT_EQ(smell_type_from_string("ComplexMethod"), std::nullopt);
  EXPECT_TRUE(is_class_smell(SmellType::kDataClass));
  EXPECT_FALSE(is_class_smell(SmellType::kFeatureEnvy));
}

TEST(SmellSuite, PositiveFixturesFirePlantedSmell) {
  for (const char* dir : kSmellDirs) {
    auto expected = read_json(fixture(std::string("smells/") + dir + "/expected.json"));
    Analysis a = analyze_fixture(std::string("smells/") + dir + "/positive");
    const auto& pos = expected.at("positive");
    EXPECT_EQ(keys_of(a.findings), json_set(pos.at("findings"))) << dir;
    std::set<std::string> fired_types;
    for (const SmellFinding& f : a.findings) fired_types.insert(to_string(f.type));
    std::set<std::string> allowed{pos.at("planted").get<std::string>()};
    if (pos.contains("entailed")) {
      for (const auto& e : pos.at("entailed")) allowed.insert(e.get<std::string>());
    }
    EXPECT_EQ(fired_types, allowed) << dir;
  }
}

TEST(SmellSuite, BoundaryFixturesFireNothing) {
  for (const char* dir : kSmellDirs) {
    Analysis a = analyze_fixture(std::string("smells/") + dir + "/boundary");
    EXPECT_TRUE(a.findings.empty()) << dir << ": " << (a.findings.empty() ? "" : finding_key(a.findings[0]));
  }
}

TEST(SmellSuite, MiniFixtureFindings) {
  auto expected = read_json(fixture("mini/expected_model.json"));
  Analysis a = analyze_fixture("mini");
  EXPECT_EQ(keys_of(a.findings), json_set(expected.at("findings")));
}

TEST(MethodStrategies, StrictAndInclusiveBounds) {
  Thresholds t;
  auto fired = [&](const MetricVector& mv) { return types_of(detect_method_smells(mv, t)); };
  // LongMethod: MLOC > 65
  EXPECT_TRUE(fired(method_vector(65, 1, 0, 0, 0, 1, 0)).empty());
  EXPECT_EQ(fired(method_vector(66, 1, 0, 0, 0, 1, 0)), std::set<SmellType>{SmellType::kLongMethod});
  // ConditionalComplexity: CYCLO >= 10
  EXPECT_TRUE(fired(method_vector(10, 9, 0, 0, 0, 1, 0)).empty());
  EXPECT_EQ(fired(method_vector(10, 10, 0, 0, 0, 1, 0)),
            std::set<SmellType>{SmellType::kConditionalComplexity});
  // BrainMethod: MLOC > 65, CYCLO >= 7, MAXNESTING >= 5, NOAV > 7
  std::set<SmellType> brain{SmellType::kBrainMethod, SmellType::kLongMethod};
  EXPECT_EQ(fired(method_vector(66, 7, 5, 8, 0, 1, 0)), brain);
  EXPECT_EQ(fired(method_vector(66, 6, 5, 8, 0, 1, 0)), std::set<SmellType>{SmellType::kLongMethod});
  EXPECT_EQ(fired(method_vector(66, 7, 4, 8, 0, 1, 0)), std::set<SmellType>{SmellType::kLongMethod});
  EXPECT_EQ(fired(method_vector(66, 7, 5, 7, 0, 1, 0)), std::set<SmellType>{SmellType::kLongMethod});
  // FeatureEnvy: ATFD > 5, LAA < 1/3, FDP <= 3
  std::set<SmellType> envy{SmellType::kFeatureEnvy};
  EXPECT_EQ(fired(method_vector(5, 1, 0, 6, 6, 0.2, 3)), envy);
  EXPECT_TRUE(fired(method_vector(5, 1, 0, 6, 5, 0.2, 3)).empty());
  EXPECT_TRUE(fired(method_vector(5, 1, 0, 6, 6, 1.0 / 3.0, 3)).empty());
  EXPECT_TRUE(fired(method_vector(5, 1, 0, 6, 6, 0.2, 4)).empty());
}

TEST(ClassStrategies, GodBrainAndDataClass) {
  Thresholds t;
  auto fired = [&](const MetricVector& cv, std::vector<SmellFinding> bms = {}) {
    return types_of(detect_class_smells(cv, bms, t));
  };
  std::set<SmellType> god{SmellType::kGodClass};
  EXPECT_EQ(fired(class_vector(6, 47, 0.2, 10, 1, 0, 0)), god);
  EXPECT_TRUE(fired(class_vector(5, 47, 0.2, 10, 1, 0, 0)).empty());
  EXPECT_TRUE(fired(class_vector(6, 46, 0.2, 10, 1, 0, 0)).empty());
  EXPECT_TRUE(fired(class_vector(6, 47, 1.0 / 3.0, 10, 1, 0, 0)).empty());

  std::set<SmellType> brain{SmellType::kBrainClass};
  std::vector<SmellFinding> two{brain_method_in("p.A"), brain_method_in("p.A")};
  std::vector<SmellFinding> one{brain_method_in("p.A"), brain_method_in("p.Other"),
                                brain_method_in("p.AB")};
  EXPECT_EQ(fired(class_vector(0, 47, 0.4, 195, 1, 0, 0), two), brain);
  EXPECT_TRUE(fired(class_vector(0, 47, 0.5, 195, 1, 0, 0), two).empty());
  EXPECT_TRUE(fired(class_vector(0, 47, 0.4, 194, 1, 0, 0), two).empty());
  EXPECT_TRUE(fired(class_vector(0, 47, 0.4, 195, 1, 0, 0), one).empty());
  EXPECT_EQ(fired(class_vector(0, 94, 0.4, 390, 1, 0, 0), one), brain);
  EXPECT_TRUE(fired(class_vector(0, 93, 0.4, 390, 1, 0, 0), one).empty());
  EXPECT_EQ(fired(class_vector(6, 94, 0.2, 390, 1, 0, 0), two), god) << "GodClass excludes BrainClass";
  auto bc = detect_class_smells(class_vector(0, 47, 0.4, 195, 1, 0, 0), two, t);
  ASSERT_EQ(bc.size(), 1u);
  EXPECT_EQ(bc[0].evidence.at(std::string(kBrainMethodCount)), 2);

  std::set<SmellType> data{SmellType::kDataClass};
  EXPECT_EQ(fired(class_vector(0, 30, 0, 10, 0.2, 3, 3)), data);
  EXPECT_TRUE(fired(class_vector(0, 30, 0, 10, 0.2, 3, 2)).empty());
  EXPECT_TRUE(fired(class_vector(0, 31, 0, 10, 0.2, 3, 3)).empty());
  EXPECT_EQ(fired(class_vector(0, 46, 0, 10, 0.2, 6, 5)), data);
  EXPECT_TRUE(fired(class_vector(0, 47, 0, 10, 0.2, 6, 5)).empty());
  EXPECT_TRUE(fired(class_vector(0, 30, 0, 10, 1.0 / 3.0, 3, 3)).empty());
}

TEST(Strategies, EvidenceRecordsMetricsRead) {
  auto f = detect_method_smells(method_vector(66, 1, 0, 0, 0, 1, 0), Thresholds{});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].evidence.at("MLOC"), 66);
  EXPECT_EQ(f[0].entity_key, "p.A#m()");
  EXPECT_EQ(finding_key(f[0]), "LongMethod|p.A#m()");
}

TEST(Strategies, ScopeMismatchIsIntegrityError) {
  Thresholds t;
  EXPECT_THROW(detect_method_smells(class_vector(0, 0, 0, 0, 0, 0, 0), t), IntegrityError);
  EXPECT_THROW(detect_class_smells(method_vector(0, 0, 0, 0, 0, 0, 0), {}, t), IntegrityError);
  MetricVector partial = method_vector(0, 0, 0, 0, 0, 0, 0);
  partial.values.erase("LAA");
  EXPECT_THROW(detect_method_smells(partial, t), IntegrityError);
}

TEST(Strategies, BrainMethodEntailsLongMethodProperty) {
  std::mt19937_64 rng(0xb4a1);
  std::uniform_int_distribution<int> small(0, 15);
  std::uniform_int_distribution<int> lines(40, 90);
  Thresholds t;
  int violations = 0;
  int brain = 0;
  for (int i = 0; i < kCases; ++i) {
    auto mv = method_vector(lines(rng), small(rng), small(rng) / 2, small(rng), small(rng),
                            small(rng) / 15.0, small(rng) / 3);
    auto types = types_of(detect_method_smells(mv, t));
    if (types.count(SmellType::kBrainMethod)) {
      ++brain;
      if (!types.count(SmellType::kLongMethod)) ++violations;
    }
  }
  EXPECT_EQ(violations, 0);
  EXPECT_GT(brain, 0);
}

TEST(Strategies, DetectAllIsSorted) {
  Analysis a = analyze_fixture("smells/brain_class/positive");
  EXPECT_TRUE(std::is_sorted(a.findings.begin(), a.findings.end(),
                             [](const SmellFinding& x, const SmellFinding& y) {
                               return std::tie(x.file, x.entity_key, x.type) <
                                      std::tie(y.file, y.entity_key, y.type);
                             }));
}

TEST(Monotonicity, TighteningAnyThresholdNeverGrowsFindingsProperty) {
  PropertyResult r = threshold_monotonicity(0x3030, kCases);
  EXPECT_EQ(r.cases, kCases);
  EXPECT_EQ(r.violations, 0) << r.first_failure;
  EXPECT_GT(r.interesting, 0);
}

TEST(Monotonicity, TighteningOnSyntheticVectorsProperty) {
  std::mt19937_64 rng(0x3131);
  std::uniform_real_distribution<double> factor(1.0, 1.5);
  std::uniform_int_distribution<int> count(0, 120);
  std::uniform_real_distribution<double> ratio(0.0, 1.0);
  auto terms = threshold_terms();
  int violations = 0;
  for (int i = 0; i < kCases; ++i) {
    ProjectMetrics pm;
    for (int c = 0; c < 4; ++c) {
      MetricVector cv = class_vector(count(rng) / 10, count(rng), ratio(rng), count(rng) * 4,
                                     ratio(rng), count(rng) / 20, count(rng) / 10);
      cv.key = "p.C" + std::to_string(c);
      cv.file = "p/C" + std::to_string(c) + ".java";
      pm.classes.push_back(cv);
      for (int m = 0; m < 3; ++m) {
        MetricVector mv = method_vector(count(rng), count(rng) / 8, count(rng) / 20,
                                        count(rng) / 10, count(rng) / 12, ratio(rng),
                                        count(rng) / 24);
        mv.key = cv.key + "#m" + std::to_string(m) + "()";
        mv.file = cv.file;
        pm.methods.push_back(mv);
      }
    }
    const ThresholdTerm& term = terms[i % terms.size()];
    Thresholds tight = tighten(Thresholds{}, term, factor(rng));
    std::string v = monotonicity_violation(detect_all(pm, Thresholds{}), detect_all(pm, tight));
    if (!v.empty()) {
      ++violations;
      ADD_FAILURE() << "case " << i << " term " << term.smell << "." << term.term << ": " << v;
    }
  }
  EXPECT_EQ(violations, 0);
}
