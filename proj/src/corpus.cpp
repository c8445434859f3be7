#include "glie/corpus.hpp"

namespace glie {

namespace {

using Entry = GradedLieAlgebra::TableEntry;

Degree deg(std::int64_t d) { return Degree{{d}}; }

AlgebraPtr make_ab2_f2() {
  FieldSpec f = FieldSpec::prime(2);
  return std::make_shared<GradedLieAlgebra>(
      "ab2_f2", f, AbelianGroup(1, {}), std::vector<std::string>{"a", "b"},
      std::vector<Degree>{deg(0), deg(1)}, std::vector<Entry>{});
}

AlgebraPtr make_sol2(const std::string& name, FieldSpec f) {
  // [e, f] = f
  std::vector<Entry> br{{0, 1, {{1, f.one()}}}};
  return std::make_shared<GradedLieAlgebra>(
      name, f, AbelianGroup(1, {}), std::vector<std::string>{"e", "f"},
      std::vector<Degree>{deg(0), deg(1)}, br);
}

AlgebraPtr make_heis3(const std::string& name, FieldSpec f) {
  // [x, y] = z
  std::vector<Entry> br{{0, 1, {{2, f.one()}}}};
  return std::make_shared<GradedLieAlgebra>(
      name, f, AbelianGroup(1, {}), std::vector<std::string>{"x", "y", "z"},
      std::vector<Degree>{deg(1), deg(1), deg(2)}, br);
}

AlgebraPtr make_sl2_f5() {
  FieldSpec f = FieldSpec::prime(5);
  // basis e, h, f with [e,f] = h, [h,e] = 2e, [h,f] = 3f; stored as i < j:
  // [e,h] = 3e, [e,f] = h, [h,f] = 3f
  std::vector<Entry> br{
      {0, 1, {{0, f.from_int(3)}}},
      {0, 2, {{1, f.one()}}},
      {1, 2, {{2, f.from_int(3)}}},
  };
  return std::make_shared<GradedLieAlgebra>(
      "sl2_f5", f, AbelianGroup(1, {}), std::vector<std::string>{"e", "h", "f"},
      std::vector<Degree>{deg(1), deg(0), deg(-1)}, br);
}

AlgebraPtr make_dsum_f2() {
  FieldSpec f = FieldSpec::prime(2);
  // sol2 on {e, f} plus heis3 on {x, y, z}
  std::vector<Entry> br{
      {0, 1, {{1, f.one()}}},
      {2, 3, {{4, f.one()}}},
  };
  return std::make_shared<GradedLieAlgebra>(
      "dsum_f2", f, AbelianGroup(1, {}),
      std::vector<std::string>{"e", "f", "x", "y", "z"},
      std::vector<Degree>{deg(0), deg(1), deg(1), deg(1), deg(2)}, br);
}

}  // namespace

const std::vector<AlgebraPtr>& builtin_corpus() {
  static const std::vector<AlgebraPtr> corpus{
      make_ab2_f2(),
      make_sol2("sol2_f2", FieldSpec::prime(2)),
      make_sol2("sol2_q", FieldSpec::rational()),
      make_heis3("heis3_f2", FieldSpec::prime(2)),
      make_heis3("heis3_f3", FieldSpec::prime(3)),
      make_sl2_f5(),
      make_dsum_f2(),
  };
  return corpus;
}

AlgebraPtr corpus_algebra(const std::string& name) {
  for (const AlgebraPtr& a : builtin_corpus())
    if (a->name() == name) return a;
  throw std::out_of_range("no corpus algebra named '" + name + "'");
}

}  // namespace glie
