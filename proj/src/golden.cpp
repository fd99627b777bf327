#include "peakalg/golden.hpp"

#include <stdexcept>

namespace peakalg {

namespace {

std::vector<std::vector<Rational>> to_rows(
    const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<Rational>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (int x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> golden_matrix(MatrixPair pair, int n) {
  switch (pair) {
    case MatrixPair::QS:
      switch (n) {
        case 3: return to_rows({{1, 2}, {0, 1}});
        case 4: return to_rows({{1, 2, 2}, {0, 1, 2}, {0, 0, 1}});
        case 5:
          return to_rows({{1, 2, 6, 6, 4},
                          {0, 1, 2, 2, 2},
                          {0, 0, 1, 2, 2},
                          {0, 0, 0, 1, 2},
                          {0, 0, 0, 0, 1}});
        case 6:
          return to_rows({{1, 2, 2, 4, 8, 12, 8, 4},
                          {0, 1, 2, 2, 6, 8, 6, 4},
                          {0, 0, 1, 0, 2, 2, 2, 2},
                          {0, 0, 0, 1, 2, 6, 6, 4},
                          {0, 0, 0, 0, 1, 2, 2, 2},
                          {0, 0, 0, 0, 0, 1, 2, 2},
                          {0, 0, 0, 0, 0, 0, 1, 2},
                          {0, 0, 0, 0, 0, 0, 0, 1}});
        default: break;
      }
      break;
    case MatrixPair::QPi:
      switch (n) {
        case 3: return to_rows({{4, 4}, {0, 2}});
        case 4: return to_rows({{4, 4, 4}, {0, 4, 4}, {0, 0, 2}});
        case 5:
          return to_rows({{8, 8, 8, 8, 8},
                          {0, 4, 4, 0, 4},
                          {0, 0, 4, 4, 4},
                          {0, 0, 0, 4, 4},
                          {0, 0, 0, 0, 2}});
        case 6:
          return to_rows({{8, 8, 8, 8, 8, 8, 8, 8},
                          {0, 8, 8, 8, 8, 0, 8, 8},
                          {0, 0, 4, 0, 4, 0, 0, 4},
                          {0, 0, 0, 8, 8, 8, 8, 8},
                          {0, 0, 0, 0, 4, 4, 0, 4},
                          {0, 0, 0, 0, 0, 4, 4, 4},
                          {0, 0, 0, 0, 0, 0, 4, 4},
                          {0, 0, 0, 0, 0, 0, 0, 2}});
        default: break;
      }
      break;
    case MatrixPair::SbarPi:
      switch (n) {
        case 3: return to_rows({{1, 0}, {0, 1}});
        case 4: return to_rows({{1, -1, 0}, {0, 1, 0}, {0, 0, 1}});
        case 5:
          return to_rows({{1, 0, -1, 1, 0},
                          {0, 1, -1, 0, 0},
                          {0, 0, 1, -1, 0},
                          {0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 1}});
        case 6:
          return to_rows({{1, -1, 0, -1, 0, 1, -1, 0},
                          {0, 1, 0, -1, -1, 1, 0, 0},
                          {0, 0, 1, 0, -1, 0, 0, 0},
                          {0, 0, 0, 1, 0, -1, 1, 0},
                          {0, 0, 0, 0, 1, -1, 0, 0},
                          {0, 0, 0, 0, 0, 1, -1, 0},
                          {0, 0, 0, 0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 0, 0, 0, 1}});
        default: break;
      }
      break;
    case MatrixPair::PiSbar:
      switch (n) {
        case 3: return to_rows({{1, 0}, {0, 1}});
        case 4: return to_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
        case 5:
          return to_rows({{1, 0, 1, 0, 0},
                          {0, 1, 1, 1, 0},
                          {0, 0, 1, 1, 0},
                          {0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 1}});
        case 6:
          return to_rows({{1, 1, 0, 2, 1, 1, 0, 0},
                          {0, 1, 0, 1, 1, 1, 0, 0},
                          {0, 0, 1, 0, 1, 1, 1, 0},
                          {0, 0, 0, 1, 0, 1, 0, 0},
                          {0, 0, 0, 0, 1, 1, 1, 0},
                          {0, 0, 0, 0, 0, 1, 1, 0},
                          {0, 0, 0, 0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 0, 0, 0, 1}});
        default: break;
      }
      break;
    case MatrixPair::SbarStarK:
      break;
  }
  throw std::invalid_argument("no reference matrix for this pair and n");
}

std::vector<GoldenRelation> golden_relations(int n) {
  auto c = [](std::initializer_list<int> parts) {
    return Composition(std::vector<int>(parts));
  };
  switch (n) {
    case 2:
      return {{{1, c({1, 1})}}};
    case 3:
      return {{{1, c({1, 1, 1})}}, {{1, c({2, 1})}, {1, c({1, 2})}}};
    case 4:
      return {{{1, c({1, 1, 1, 1})}},
              {{1, c({2, 1, 1})}},
              {{1, c({1, 2, 1})}, {1, c({1, 1, 2})}},
              {{1, c({1, 2, 1})}, {2, c({2, 2})}},
              {{1, c({3, 1})}, {1, c({2, 2})}, {1, c({1, 3})}}};
    case 5:
      return {{{1, c({1, 1, 1, 1, 1})}},
              {{1, c({2, 1, 1, 1})}},
              {{1, c({3, 1, 1})}},
              {{1, c({1, 2, 1, 1})}},
              {{1, c({1, 1, 2, 1})}, {1, c({1, 1, 1, 2})}},
              {{1, c({2, 2, 1})}, {1, c({2, 1, 2})}},
              {{1, c({2, 2, 1})}, {1, c({1, 2, 2})}},
              {{2, c({1, 2, 2})}, {1, c({1, 1, 2, 1})}},
              {{2, c({3, 2})}, {2, c({2, 3})}, {1, c({2, 2, 1})},
               {1, c({1, 3, 1})}},
              {{1, c({1, 3, 1})}, {1, c({1, 2, 2})}, {1, c({1, 1, 3})}},
              {{1, c({4, 1})}, {1, c({3, 2})}, {1, c({2, 3})},
               {1, c({1, 4})}}};
    case 6:
      return {{{1, c({1, 1, 1, 1, 1, 1})}},
              {{1, c({2, 1, 1, 1, 1})}},
              {{1, c({3, 1, 1, 1})}},
              {{1, c({4, 1, 1})}},
              {{1, c({1, 3, 1, 1})}},
              {{1, c({2, 2, 1, 1})}},
              {{1, c({1, 2, 1, 1, 1})}},
              {{1, c({1, 1, 2, 1, 1})}},
              {{1, c({3, 2, 1})}, {1, c({3, 1, 2})}},
              {{1, c({2, 1, 2, 1})}, {1, c({2, 1, 1, 2})}},
              {{1, c({1, 2, 2, 1})}, {1, c({1, 2, 1, 2})}},
              {{1, c({1, 1, 1, 2, 1})}, {1, c({1, 1, 1, 1, 2})}},
              {{1, c({1, 2, 2, 1})}, {1, c({1, 1, 2, 2})}},
              {{1, c({1, 1, 1, 2, 1})}, {2, c({1, 1, 2, 2})}},
              {{1, c({2, 1, 2, 1})}, {2, c({2, 2, 2})}},
              {{2, c({1, 3, 2})}, {2, c({1, 2, 3})}, {1, c({1, 2, 2, 1})},
               {1, c({1, 1, 3, 1})}},
              {{2, c({2, 3, 1})}, {2, c({3, 3})}, {1, c({3, 2, 1})},
               {1, c({1, 3, 2})}, {1, c({2, 2, 2})}},
              {{2, c({4, 2})}, {2, c({2, 4})}, {1, c({1, 4, 1})},
               {1, c({3, 2, 1})}, {1, c({1, 2, 3})}, {1, c({2, 2, 2})}},
              {{2, c({4, 2})}, {2, c({2, 4})}, {2, c({3, 3})},
               {1, c({1, 4, 1})}, {1, c({3, 2, 1})}, {1, c({2, 3, 1})}},
              {{1, c({1, 2, 2, 1})}, {2, c({3, 2, 1})}, {2, c({2, 3, 1})},
               {2, c({1, 3, 2})}, {2, c({1, 2, 3})}, {4, c({2, 2, 2})}},
              {{1, c({2, 3, 1})}, {1, c({2, 2, 2})}, {1, c({2, 1, 3})}},
              {{1, c({1, 1, 3, 1})}, {1, c({1, 1, 2, 2})},
               {1, c({1, 1, 1, 3})}},
              {{1, c({1, 4, 1})}, {1, c({1, 3, 2})}, {1, c({1, 2, 3})},
               {1, c({1, 1, 4})}},
              {{1, c({5, 1})}, {1, c({4, 2})}, {1, c({3, 3})},
               {1, c({2, 4})}, {1, c({1, 5})}}};
    default:
      throw std::invalid_argument("reference relations cover n = 2..6 only");
  }
}

NSymElement golden_q222_in_s() {
  NSymElement e(Basis::S);
  e.add(Composition{2, 2, 2}, Rational(1));
  e.add(Composition{2, 3, 1}, Rational(2));
  e.add(Composition{2, 4}, Rational(2));
  e.add(Composition{3, 2, 1}, Rational(4));
  e.add(Composition{3, 3}, Rational(8));
  e.add(Composition{4, 2}, Rational(12));
  e.add(Composition{5, 1}, Rational(8));
  e.add(Composition{6}, Rational(4));
  return e;
}

QSymElement golden_sstar_321_m() {
  QSymElement e(QBasis::M);
  auto add = [&](std::initializer_list<int> parts, int c) {
    e.add(Composition(std::vector<int>(parts)), Rational(c));
  };
  add({3, 2, 1}, 1);
  add({3, 1, 2}, 1);
  add({3, 1, 1, 1}, 2);
  add({2, 3, 1}, 2);
  add({2, 2, 2}, 4);
  add({2, 2, 1, 1}, 8);
  add({2, 1, 3}, 2);
  add({2, 1, 2, 1}, 8);
  add({2, 1, 1, 2}, 8);
  add({2, 1, 1, 1, 1}, 16);
  add({1, 4, 1}, 1);
  add({1, 3, 2}, 3);
  add({1, 3, 1, 1}, 6);
  add({1, 2, 3}, 2);
  add({1, 2, 2, 1}, 8);
  add({1, 2, 1, 2}, 8);
  add({1, 2, 1, 1, 1}, 16);
  add({1, 1, 3, 1}, 4);
  add({1, 1, 2, 2}, 8);
  add({1, 1, 2, 1, 1}, 16);
  add({1, 1, 1, 3}, 4);
  add({1, 1, 1, 2, 1}, 16);
  add({1, 1, 1, 1, 2}, 16);
  add({1, 1, 1, 1, 1, 1}, 32);
  return e;
}

QSymElement golden_sstar_321_f() {
  QSymElement e(QBasis::F);
  auto add = [&](std::initializer_list<int> parts, int c) {
    e.add(Composition(std::vector<int>(parts)), Rational(c));
  };
  add({3, 2, 1}, 1);
  add({3, 1, 2}, 1);
  add({2, 3, 1}, 2);
  add({2, 2, 2}, 4);
  add({2, 2, 1, 1}, 2);
  add({2, 1, 3}, 2);
  add({2, 1, 2, 1}, 3);
  add({2, 1, 1, 2}, 1);
  add({1, 4, 1}, 1);
  add({1, 3, 2}, 3);
  add({1, 3, 1, 1}, 2);
  add({1, 2, 3}, 2);
  add({1, 2, 2, 1}, 4);
  add({1, 2, 1, 2}, 2);
  add({1, 1, 3, 1}, 1);
  add({1, 1, 2, 2}, 1);
  return e;
}

std::vector<int> golden_q222_p_stats() {
  return {0, 1, 1, 2, 1, 2, 2, 1, 3, 1, 2, 2, 2};
}

}  // namespace peakalg
