#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "pperm/bijections.hpp"
#include "pperm/enumerate.hpp"
#include "pperm/statistics.hpp"

using namespace pperm;

namespace {

std::vector<Cycle> partial_cycles(const PartialPerm& p) {
  std::vector<Cycle> out;
  for (const auto& c : to_cycle_form(p).cycles)
    if (c.partial) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("fundamental bijection on words") {
  CHECK(fundamental({3, 1, 6, 4, 2, 5}).str() == "(3 1)(6 4 2)(5)");
  CHECK(fundamental({2, 4, 5}).str() == "(2)(4)(5)");
  CHECK(fundamental({}).cycles.empty());

  // as a permutation: 316425 -> 361254
  CHECK(from_cycle_form(fundamental({3, 1, 6, 4, 2, 5}), 6).str() == "3 6 1 2 5 4");
}

TEST_CASE("fundamental inverse") {
  CHECK(fundamental_inverse(CycleForm::parse("(3 1)(6 4 2)(5)")) ==
        std::vector<int>{3, 1, 6, 4, 2, 5});
  CHECK(fundamental_inverse(CycleForm::parse("(1)(2)(3)")) == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(fundamental_inverse(CycleForm::parse("(1 X)")), std::invalid_argument);

  for (int n = 0; n <= 6; ++n)
    for_each_partial_perm(n, 0, [&](const PartialPerm& p) {
      CHECK(fundamental_inverse(fundamental(p.image())) == p.image());
    });
}

TEST_CASE("generalized fundamental bijection examples") {
  CHECK(to_cycle_form(gen_fundamental(PartialPerm::parse("1 X 2 4 5")))
            .equivalent(CycleForm::parse("(1 3 X)(2)(4)(5)")));
  CHECK(to_cycle_form(gen_fundamental(PartialPerm::parse("3 2 X X 1 8 6 X")))
            .equivalent(CycleForm::parse("(3 2 4 X)(5 X)(1 8 6 7 X)")));
  CHECK(to_cycle_form(gen_fundamental(PartialPerm::parse("1 X 3 X 7 5 6")))
            .equivalent(CycleForm::parse("(1 2 X)(3 4 X)(7 5)(6)")));
}

TEST_CASE("generalized fundamental inverse examples") {
  auto p = from_cycle_form(CycleForm::parse("(5 4 1 X)(6 X)(2 7 X)(3)"), 7);
  CHECK(gen_fundamental_inverse(p).str() == "5 4 X X 2 X 3");

  auto q = from_cycle_form(CycleForm::parse("(1 3 X)(2)(4)(5)"), 5);
  CHECK(gen_fundamental_inverse(q).str() == "1 X 2 4 5");
}

TEST_CASE("generalized fundamental bijection: round trip and bijectivity") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<PartialPerm> image;
      Int total = 0;
      for_each_partial_perm(n, k, [&](const PartialPerm& p) {
        ++total;
        PartialPerm fp = gen_fundamental(p);
        CHECK(fp.order() == n);
        CHECK(fp.gaps() == k);
        CHECK(gen_fundamental_inverse(fp) == p);
        image.insert(fp);
      });
      CHECK(Int(image.size()) == total);
    }
  }
}

TEST_CASE("des-exc transport") {
  CHECK(des_exc_map(PartialPerm::parse("4 X 3 5 X X 2")).str() == "5 4 X X 2 X 3");
  CHECK(des_exc_map(PartialPerm::parse("1 3 7 6 X 4 2")).str() == "X 1 7 3 2 6 4");
  CHECK(des_exc_map(PartialPerm::identity(4)) == PartialPerm::identity(4));

  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<PartialPerm> image;
      Int total = 0;
      for_each_partial_perm(n, k, [&](const PartialPerm& p) {
        ++total;
        PartialPerm fp = des_exc_map(p);
        CHECK(stat_core(fp).des == stat_core(p).exc);
        image.insert(fp);
      });
      CHECK(Int(image.size()) == total);
    }
  }
}

TEST_CASE("rotation by 180 degrees") {
  // the main diagonal is fixed as a set, so the identity maps to itself
  CHECK(rotate180(PartialPerm::identity(2)) == PartialPerm::identity(2));
  CHECK(rotate180(PartialPerm::parse("X X X")) == PartialPerm::parse("X X X"));
  CHECK(rotate180(PartialPerm::parse("2 3 1")).str() == "3 1 2");

  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for_each_partial_perm(n, k, [&](const PartialPerm& p) {
        CHECK(rotate180(rotate180(p)) == p);
        CHECK(stat_core(p).exc == n - k - stat_core(rotate180(p)).wex);
      });
    }
  }
}

TEST_CASE("antidiagonal reflection") {
  CHECK(reflect_antidiagonal(PartialPerm::identity(3)) == PartialPerm::identity(3));
  CHECK(reflect_antidiagonal(PartialPerm::parse("2 1")) == PartialPerm::parse("2 1"));

  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for_each_partial_perm(n, k, [&](const PartialPerm& p) {
        PartialPerm r = reflect_antidiagonal(p);
        CHECK(reflect_antidiagonal(r) == p);
        CHECK(stat_core(p).rlmin == stat_core(r).rlmin_star);
      });
    }
  }
}

TEST_CASE("local complement") {
  CHECK(local_complement({5, 1, 4, 3}, {1, 3, 4, 5}) == std::vector<int>{1, 5, 3, 4});
  CHECK(local_complement({9, 1, 6}, {1, 6, 9}) == std::vector<int>{1, 9, 6});
  CHECK(local_complement({7}, {7}) == std::vector<int>{7});
  CHECK_THROWS_AS(local_complement({2}, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(local_complement({1}, {3, 1}), std::invalid_argument);
}

TEST_CASE("cycle-up-down insertions") {
  // order 4, cycles (1 4 3 X)(2); insert 5 into the partial cycle
  auto rho = PartialPerm::parse("4 2 X 3");
  Cycle c{{1, 4, 3}, true};
  auto grown = cud_insert_partial(rho, c);
  CHECK(to_cycle_form(grown).equivalent(CycleForm::parse("(1 5 3 4 X)(2)")));
  CHECK(cud_case(grown) == 3);

  auto closed = cud_insert_full(rho, c);
  CHECK(to_cycle_form(closed).equivalent(CycleForm::parse("(1 5 3 4)(2)")));
  CHECK(cud_case(closed) == 4);
  CHECK(stat_core(closed).cyc_ge2 == stat_core(rho).cyc_ge2 + 1);

  // smallest case: (1 X) grows into (1 2 X), or closes into (1 2)
  auto tiny = PartialPerm::parse("X");
  Cycle whole{{1}, true};
  CHECK(to_cycle_form(cud_insert_partial(tiny, whole)).str() == "(1 2 X)");
  CHECK(cud_insert_full(tiny, whole).str() == "2 1");

  CHECK_THROWS_AS(cud_insert_partial(rho, Cycle{{2}, true}), std::invalid_argument);
}

TEST_CASE("cycle-up-down merge") {
  // order 8 host with partial cycles (2 7 3 X) and (1 6 X)
  auto rho = from_cycle_form(CycleForm::parse("(2 7 3 X)(1 6 X)(4)(5 8)"), 8);
  auto merged = cud_merge(rho, Cycle{{2, 7, 3}, true}, Cycle{{1, 6}, true});
  bool found = false;
  for (const auto& c : to_cycle_form(merged).cycles)
    found = found || c.elems == std::vector<int>{2, 7, 3, 9, 1, 6};
  CHECK(found);

  auto rho2 = from_cycle_form(CycleForm::parse("(2 7 3 4 X)(1 6 X)(5)(8)"), 8);
  auto merged2 = cud_merge(rho2, Cycle{{2, 7, 3, 4}, true}, Cycle{{1, 6}, true});
  found = false;
  for (const auto& c : to_cycle_form(merged2).cycles)
    found = found || c.elems == std::vector<int>{2, 7, 3, 4, 1, 9, 6};
  CHECK(found);

  CHECK_THROWS_AS(cud_merge(rho, Cycle{{1, 6}, true}, Cycle{{2, 7, 3}, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cud_merge(rho, Cycle{{2, 7, 3}, true}, Cycle{{2, 7, 3}, true}),
                  std::invalid_argument);
}

TEST_CASE("case classification") {
  CHECK(cud_case(PartialPerm::identity(3)) == 2);
  CHECK(cud_case(PartialPerm::parse("1 2 X")) == 1);
  CHECK(cud_case(from_cycle_form(CycleForm::parse("(1 5 3 4 X)(2)"), 5)) == 3);
  CHECK(cud_case(PartialPerm::parse("2 1")) == 4);
  CHECK(cud_case(from_cycle_form(CycleForm::parse("(2 3 1 X)"), 3)) == 5);
  CHECK_THROWS_AS(cud_case(PartialPerm::parse("2 3 X")), std::invalid_argument);
}

TEST_CASE("five constructions: inverses and joint surjectivity") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<PartialPerm> built;
      auto add = [&](const PartialPerm& p) { CHECK(built.insert(p).second); };

      if (k >= 1 && k - 1 <= n - 1)
        for_each_partial_perm(n - 1, k - 1, [&](const PartialPerm& rho) {
          if (is_cycle_up_down(rho)) add(append_gap(rho));
        });
      if (k <= n - 1)
        for_each_partial_perm(n - 1, k, [&](const PartialPerm& rho) {
          if (!is_cycle_up_down(rho)) return;
          add(append_fixed(rho));
          for (const auto& c : partial_cycles(rho)) {
            PartialPerm img = cud_insert_partial(rho, c);
            add(img);
            auto split = cud_insert_partial_inverse(img);
            CHECK(split.rho == rho);
            CHECK(split.c == c);
          }
        });
      if (k + 1 <= n - 1)
        for_each_partial_perm(n - 1, k + 1, [&](const PartialPerm& rho) {
          if (!is_cycle_up_down(rho)) return;
          auto parts = partial_cycles(rho);
          for (const auto& c : parts) {
            PartialPerm img = cud_insert_full(rho, c);
            add(img);
            auto split = cud_insert_full_inverse(img);
            CHECK(split.rho == rho);
            CHECK(split.c == c);
          }
          for (const auto& c1 : parts)
            for (const auto& c2 : parts)
              if (c1.smallest() > c2.smallest()) {
                PartialPerm img = cud_merge(rho, c1, c2);
                add(img);
                auto split = cud_merge_inverse(img);
                CHECK(split.rho == rho);
                CHECK(split.c1 == c1);
                CHECK(split.c2 == c2);
              }
        });

      Int expect = class_count(n, k, ClassFilter::CycleUpDown);
      CHECK(Int(built.size()) == expect);
      for (const auto& p : built) CHECK(is_cycle_up_down(p));
    }
  }
}

TEST_CASE("source set sizes behind cases 4 and 5") {
  // |{(rho, c)}| = (k+1) |U_{n-1,k+1}| and pairs give the binomial factor
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k + 1 <= n - 1; ++k) {
      Int members = 0, with_cycle = 0, with_pairs = 0;
      for_each_partial_perm(n - 1, k + 1, [&](const PartialPerm& rho) {
        if (!is_cycle_up_down(rho)) return;
        ++members;
        with_cycle += rho.gaps();
        with_pairs += Int(rho.gaps()) * (rho.gaps() - 1) / 2;
      });
      CHECK(with_cycle == Int(k + 1) * members);
      CHECK(with_pairs == Int(k + 1) * k / 2 * members);
    }
  }
}
