#include <random>

#include "doctest.h"
#include "tetralab/error.hpp"
#include "tetralab/laurent.hpp"
#include "tetralab/recursion.hpp"
#include "tetralab/sparse_operator.hpp"

using namespace tetralab;

namespace {

Laurent random_laurent(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-5, 5), count(0, 4), ex(lo, hi);
  std::map<int, BigInt> t;
  for (int i = count(rng); i > 0; --i) t[ex(rng)] += coef(rng);
  return Laurent::from_terms(t);
}

}  // namespace

TEST_CASE("laurent basics") {
  const Laurent u = Laurent::monomial(1);
  const Laurent p = u * u + Laurent(2) + Laurent::monomial(-2, 3);
  CHECK(p.str() == "3u^-2 + 2 + u^2");
  CHECK(p.at_one() == 6);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(5) == 0);
  CHECK((p - p).is_zero());
  CHECK(p.reflect().str() == "u^-2 + 2 + 3u^2");
  CHECK(p.substitute_power(2).str() == "3u^-4 + 2 + u^4");
  CHECK(Laurent::from_terms({{3, 0}, {1, 2}}).terms().size() == 1);
  CHECK(Laurent::monomial(0, BigInt(1) << 100).at_one() == (BigInt(1) << 100));
}

TEST_CASE("laurent ring laws on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_laurent(rng, -6, 6), b = random_laurent(rng, -6, 6), c = random_laurent(rng, -6, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Laurent(1) == a);
    CHECK(a + Laurent() == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_laurent(rng, 0, 5), b = random_laurent(rng, 0, 5);
    for (long long x : {-2LL, 0LL, 1LL, 3LL}) {
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
      CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
    const auto c = random_laurent(rng, -5, 5), d = random_laurent(rng, -5, 5);
    CHECK((c * d).at_one() == c.at_one() * d.at_one());
    CHECK((c * d).evaluate(-1) == c.evaluate(-1) * d.evaluate(-1));
  }
}

TEST_CASE("sparse operators against dense products") {
  std::mt19937 rng(3);
  auto random_op = [&](std::uint32_t dim) {
    SparseOperator op({dim});
    std::uniform_int_distribution<int> v(-2, 2);
    for (std::uint32_t i = 0; i < dim; ++i)
      for (std::uint32_t j = 0; j < dim; ++j)
        if (int x = v(rng)) op.add(i, j, Laurent::monomial(x, x));
    return op;
  };
  for (int t = 0; t < 20; ++t) {
    const auto a = random_op(4), b = random_op(4);
    const auto ab = a * b;  // b first
    for (std::uint64_t i = 0; i < 4; ++i)
      for (std::uint64_t k = 0; k < 4; ++k) {
        Laurent expect;
        for (std::uint64_t j = 0; j < 4; ++j) expect += b.entry(i, j) * a.entry(j, k);
        CHECK(ab.entry(i, k) == expect);
      }
    CHECK((a * b).specialize_at_one() == a.specialize_at_one() * b.specialize_at_one());
  }
  const std::array<std::uint32_t, 3> perm{2, 0, 1};
  const auto p = SparseOperator::permutation(perm);
  CHECK(p.entry(0, 2) == Laurent(1));
  CHECK((p * p * p) == SparseOperator::identity({3}));
  CHECK_THROWS_AS(SparseOperator({1u << 13, 1u << 12}), UsageError);
}

TEST_CASE("ambient chains") {
  const AmbientChain empty({2, 2}, {});
  for (std::uint64_t s = 0; s < 4; ++s) CHECK(empty.apply(s) == Combination{{s, Laurent(1)}});
  CHECK(check_equation(empty, empty).holds);

  auto phi_op = std::make_shared<const SparseOperator>(phi_matrix());
  CHECK(phi_op->nnz() == 128);
  const AmbientChain once({16, 16, 16}, {bind(phi_op, {0, 1, 2}, "P")});
  const AmbientChain swapped({16, 16, 16}, {bind(phi_op, {1, 0, 2}, "P'")});
  const auto r = check_equation(once, swapped, 1);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->lhs != r.witness->rhs);

  // linearity on formal combinations
  const std::uint64_t s1 = 0, s2 = once.flatten(std::vector<std::uint32_t>{0b0101, 0, 0});
  Combination mix{{s1, Laurent(2)}, {s2, Laurent::monomial(1, -3)}};
  Combination expect;
  for (const auto& [k, v] : once.apply(s1)) expect[k] += Laurent(2) * v;
  for (const auto& [k, v] : once.apply(s2)) expect[k] += Laurent::monomial(1, -3) * v;
  std::erase_if(expect, [](const auto& kv) { return kv.second.is_zero(); });
  CHECK(once.apply(mix) == expect);

  // partial-map clause: an admissible input reaches two outputs
  const auto out = once.apply(std::uint64_t{0});
  CHECK(out.size() == 2);
  for (const auto& [k, v] : out) CHECK(v == Laurent(1));

  // thread count does not change the report
  const AmbientChain twice({16, 16, 16}, {bind(phi_op, {0, 1, 2}), bind(phi_op, {0, 1, 2})});
  const auto a = check_equation(twice, once, 1), b = check_equation(twice, once, 3);
  CHECK(a.histogram == b.histogram);
  CHECK(a.mismatched_inputs == b.mismatched_inputs);
}
