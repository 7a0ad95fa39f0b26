#include "sascone/replay.hpp"

#include <algorithm>
#include <sstream>

#include "sascone/cone_classifier.hpp"
#include "sascone/emit.hpp"
#include "sascone/error.hpp"
#include "sascone/topology.hpp"

namespace sascone::replay {
namespace {

class Recorder {
 public:
  void expect(std::string id, std::string locator, std::string expected,
              std::string got) {
    const bool ok = expected == got;
    checks_.push_back({std::move(id), std::move(locator), std::move(expected),
                       std::move(got), ok});
  }

  // Runs a computation that may throw; a thrown error becomes the "got" value.
  template <typename Fn>
  void expect_call(std::string id, std::string locator, std::string expected, Fn&& fn) {
    std::string got;
    try {
      got = fn();
    } catch (const Error& e) {
      got = std::string("error: ") + e.what();
    }
    expect(std::move(id), std::move(locator), std::move(expected), std::move(got));
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string set_text(const std::set<Int>& values) {
  std::string out = "{";
  bool first = true;
  for (Int v : values) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

struct BouquetRow {
  Int m, l1, w1, w2, b;
  const char* range;  // as printed in the table, in range_text notation
};

}  // namespace

std::vector<Check> replay_tables(const Options& options) {
  Recorder rec;
  const BaseManifold cp1 = BaseManifold::custom(1, options.cp1_index, "CP1");
  const BaseManifold cp2 = BaseManifold::projective_space(2);

  // Four-bouquet on S2 x S3 with l2 = 1.
  const BouquetRow four_bouquet[] = {
      {0, 4, 1, 1, 4, "1/2 < v1/v2 < 2"},
      {1, 1, 5, 3, 3, "1 < v1/v2 < 5"},
      {2, 2, 3, 1, 2, "2 < v1/v2"},
      {3, 1, 7, 1, 1, "5 < v1/v2"},
  };
  for (const BouquetRow& row : four_bouquet) {
    const std::string m = std::to_string(row.m);
    const std::string loc = "four-bouquet table, m=" + m;
    auto join = [&] { return validate_join(row.l1, 1, row.w1, row.w2, cp1); };
    rec.expect_call("bouquet4.B.m" + m, loc + ", column B", std::to_string(row.b),
                    [&] { return to_string_wide(topology::b_invariant_wcone(join())); });
    rec.expect_call("bouquet4.m.m" + m, loc + ", m = l1(w1-w2)/2", m, [&] {
      return std::to_string(row.l1 * (row.w1 - row.w2) / 2);
    });
    rec.expect_call("bouquet4.k.m" + m, loc + ", B + m = k = 4", "4",
                    [&] { return std::to_string(topology::bouquet_label(join()).k); });
    rec.expect_call("bouquet4.j.m" + m, loc + ", j = l1 w2 = B", std::to_string(row.b),
                    [&] { return std::to_string(topology::bouquet_label(join()).j); });
    rec.expect_call("bouquet4.c1.m" + m, loc + ", c1(D) = -6 gamma", "-6", [&] {
      return to_string_wide(topology::c1_gamma_coeff_sphere_join(1, join()));
    });
    rec.expect_call("bouquet4.range.m" + m, loc + ", positivity range table", row.range,
                    [&] { return emit::range_text(cone::positivity_range(join())); });
    rec.expect_call("bouquet4.regular.m" + m, loc + ", regular ray v=(1,1)",
                    row.m == 0 ? "positive" : "indefinite", [&] {
                      return cone::to_string(cone::classify_ray(join(), ReebRay(1, 1)));
                    });
  }
  rec.expect("bouquet4.levelset", "four-bouquet table, g^{-1}(1) for k=4, l=1", "{1,2,3,4}",
             set_text(topology::bouquet_level_set(4, 1, 1)));

  // Two-bouquet with l2 = 3.
  const BouquetRow two_bouquet[] = {
      {0, 4, 1, 1, 4, "p+_w = t+_w (entire w-cone)"},
      {3, 1, 7, 1, 1, "1 < v1/v2"},
  };
  for (const BouquetRow& row : two_bouquet) {
    const std::string m = std::to_string(row.m);
    const std::string loc = "two-bouquet table (l2=3), m=" + m;
    auto join = [&] { return validate_join(row.l1, 3, row.w1, row.w2, cp1); };
    rec.expect_call("bouquet2.B.m" + m, loc + ", column B", std::to_string(row.b),
                    [&] { return to_string_wide(topology::b_invariant_wcone(join())); });
    rec.expect_call("bouquet2.c1.m" + m, loc + ", c1(D) = -2 gamma", "-2", [&] {
      return to_string_wide(topology::c1_gamma_coeff_sphere_join(1, join()));
    });
    rec.expect_call("bouquet2.range.m" + m, loc + ", positivity range", row.range,
                    [&] { return emit::range_text(cone::positivity_range(join())); });
  }

  // Joins S5 * S3_w with w1 w2 l1^2 = 12.
  struct Family {
    Int l1, w1, w2;
    Int c1_offset;  // c1 = 3 l2 - offset
    bool spin;
  };
  const Family families[] = {{1, 12, 1, 13, true}, {1, 4, 3, 7, true}, {2, 3, 1, 8, false}};
  for (const Family& f : families) {
    const std::string name = "M_{" + std::to_string(f.l1) + ",l2," + std::to_string(f.w1) +
                             "," + std::to_string(f.w2) + "}";
    rec.expect("s5join.torsion." + name, "S5 joins with w1 w2 l1^2 = 12, torsion of " + name, "12",
               to_string_wide(topology::torsion_order(
                   validate_join(f.l1, 1, f.w1, f.w2, cp2))));
    for (Int l2 : {1, 5, 7, 11}) {
      const std::string tag = name + ".l2=" + std::to_string(l2);
      auto join = [&] { return validate_join(f.l1, l2, f.w1, f.w2, cp2); };
      rec.expect_call("s5join.c1." + tag, "S5 joins, c1 = (3 l2 - " +
                          std::to_string(f.c1_offset) + ") gamma",
                      std::to_string(3 * l2 - f.c1_offset), [&] {
                        return to_string_wide(topology::c1_gamma_coeff_sphere_join(2, join()));
                      });
      rec.expect_call("s5join.spin." + tag, "S5 joins, second Stiefel-Whitney class",
                      f.spin ? "spin" : "non-spin", [&] {
                        return topology::spin_check(2, join()) ? std::string("spin")
                                                               : std::string("non-spin");
                      });
    }
  }

  // Positivity thresholds; l2 sharing a factor with 6 are formal values.
  struct Threshold {
    Int l1, l2, w1, w2;
    const char* range;
  };
  const Threshold thresholds[] = {
      {1, 1, 12, 1, "9 < v1/v2"},
      {1, 2, 12, 1, "6 < v1/v2"},
      {1, 3, 12, 1, "3 < v1/v2"},
      {1, 4, 12, 1, "p+_w = t+_w (entire w-cone)"},
      {1, 5, 12, 1, "p+_w = t+_w (entire w-cone)"},
      {1, 1, 4, 3, "1/3 < v1/v2"},
      {1, 2, 4, 3, "p+_w = t+_w (entire w-cone)"},
      {1, 3, 4, 3, "p+_w = t+_w (entire w-cone)"},
  };
  for (const Threshold& t : thresholds) {
    const std::string name = "M_{" + std::to_string(t.l1) + "," + std::to_string(t.l2) +
                             "," + std::to_string(t.w1) + "," + std::to_string(t.w2) + "}";
    rec.expect_call("s5join.range." + name, "S5 joins, positivity range of " + name,
                    t.range, [&] {
                      return emit::range_text(cone::positivity_range(validate_join(
                          t.l1, t.l2, t.w1, t.w2, cp2, Smoothness::Relaxed)));
                    });
  }

  // c1(D) = 0 realized by l1 = p + 1, l2 = |w|.
  rec.expect_call("s5join.c1zero", "S5 joins, l1 = p+1, l2 = |w| gives c1 = 0", "0", [&] {
    return to_string_wide(
        topology::c1_gamma_coeff_sphere_join(2, validate_join(3, 13, 12, 1, cp2)));
  });
  rec.expect_call("s5join.c1zero.range", "S5 joins, c1 = 0 cone entirely positive",
                  "p+_w = t+_w (entire w-cone)", [&] {
                    return emit::range_text(
                        cone::positivity_range(validate_join(3, 13, 12, 1, cp2)));
                  });

  return rec.take();
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

Json to_json(const std::vector<Check>& checks) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const Check& c : checks) {
    list.push_back(Json{{"id", c.id},
                        {"locator", c.locator},
                        {"expected", c.expected},
                        {"got", c.got},
                        {"passed", c.passed}});
    if (c.passed) ++passed;
  }
  return Json{{"checks", list},
              {"total", checks.size()},
              {"passed", passed},
              {"ok", passed == checks.size()}};
}

std::string diff_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const Check& c : checks) {
    if (c.passed) continue;
    os << "MISMATCH " << c.id << " (" << c.locator << "): expected " << c.expected
       << ", got " << c.got << "\n";
  }
  return os.str();
}

}  // namespace sascone::replay
