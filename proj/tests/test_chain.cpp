#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hochlef/chain.hpp"
#include "hochlef/chain_text.hpp"

using namespace hochlef;

namespace {

MonKey random_mon(std::mt19937_64& rng, unsigned n, unsigned r, int max_deg,
                  int max_ord, bool laurent) {
  std::uniform_int_distribution<int> deg(laurent ? -max_deg : 0, max_deg);
  std::uniform_int_distribution<int> ord(0, max_ord);
  std::uniform_int_distribution<unsigned> mat(0, r - 1);
  MonKey m{std::vector<int>(n), std::vector<int>(n), mat(rng), mat(rng)};
  for (unsigned v = 0; v < n; ++v) {
    m.alpha[v] = deg(rng);
    m.beta[v] = ord(rng);
  }
  return m;
}

Chain random_chain(std::mt19937_64& rng, unsigned n, unsigned r, int degree,
                   int nwords, bool laurent = false, int max_deg = 2,
                   int max_ord = 2) {
  Chain c(n, r, laurent, degree);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int t = 0; t < nwords; ++t) {
    Word w(degree + 1);
    for (auto& m : w) m = random_mon(rng, n, r, max_deg, max_ord, laurent);
    c.add_word(w, coef(rng));
  }
  return c;
}

WeylOp op(const std::string& s, unsigned n = 1, unsigned r = 1,
          bool laurent = false) {
  return parse_weyl(s, n, r, laurent);
}

}  // namespace

TEST_CASE("b on simple words") {
  auto c = parse_chain("d1\xE2\x8A\x97y1", 1);  // (d, y)
  CHECK(boundary(c) == Chain::from_op(op("1")));
  CHECK(boundary(parse_chain("1(x)y1", 1)).is_zero());
}

TEST_CASE("boundary rejects degree-0 chains") {
  CHECK_THROWS_AS(boundary(Chain::from_op(op("y1"))), std::domain_error);
}

TEST_CASE("c_2 = 1(x)d(x)y - 1(x)y(x)d and is a cycle") {
  auto c2 = generator_c2n(1, 1);
  CHECK(c2 == parse_chain("1(x)d1(x)y1 - 1(x)y1(x)d1", 1));
  CHECK(boundary(c2).is_zero());
}

TEST_CASE("c_2 with matrix rank 2 carries Id_2 on each slot") {
  auto c2 = generator_c2n(1, 2);
  CHECK(c2 == parse_chain("1(x)d1(x)y1 - 1(x)y1(x)d1", 1, 2));
  CHECK(boundary(c2).is_zero());
}

TEST_CASE("c_4 is an alternating 24-permutation sum and a cycle") {
  auto c4 = generator_c2n(2, 1);
  CHECK(c4.terms().size() == 24);
  CHECK(c4.degree() == 4);
  CHECK(boundary(c4).is_zero());
}

TEST_CASE("normalization kills scalar entries in slots >= 1") {
  CHECK(parse_chain("1(x)3(x)y1", 1).is_zero());
  CHECK(parse_chain("y1(x)(y1*d1 + 2)(x)d1", 1) ==
        parse_chain("y1(x)y1*d1(x)d1", 1));
  // r = 2: a diagonal matrix unit is not scalar, but the full identity is
  CHECK(parse_chain("1(x)(E[1,1] + E[2,2])(x)y1", 1, 2).is_zero());
  CHECK_FALSE(parse_chain("1(x)E[1,1](x)y1", 1, 2).is_zero());
}

TEST_CASE("b squared vanishes on random chains") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 60; ++it) {
    unsigned n = 1 + it % 2;
    unsigned r = 1 + (it / 2) % 2;
    int degree = 2 + it % 3;  // 2..4
    bool laurent = (it % 5 == 0);
    auto c = random_chain(rng, n, r, degree, 4, laurent);
    CHECK(boundary(boundary(c)).is_zero());
  }
}

TEST_CASE("Lie action examples") {
  // [y d, y] = y
  auto c = parse_chain("1(x)y1", 1);
  CHECK(lie_action(op("y1*d1"), c) == c);
}

TEST_CASE("interior product on degree 0 pairs with b to give L") {
  auto a0 = Chain::from_op(op("y1"));
  auto a = op("d1");
  // iota_a(a0) = -(a0, a); b of it equals [a, a0]
  CHECK(insertion(a, a0) == -parse_chain("y1(x)d1", 1));
  CHECK(boundary(insertion(a, a0)) ==
        Chain::from_op(commutator(a, op("y1"))));
}

TEST_CASE("Cartan formula L_a = b iota_a + iota_a b") {
  std::mt19937_64 rng(55);
  std::vector<WeylOp> gens = {op("d1"), op("y1"), op("y1*d1"), op("y1^2*d1"),
                              op("d1^2")};
  for (int it = 0; it < 40; ++it) {
    auto a = gens[it % gens.size()];
    int degree = 1 + it % 3;
    auto c = random_chain(rng, 1, 1, degree, 3);
    auto lhs = lie_action(a, c);
    auto rhs = boundary(insertion(a, c)) + insertion(a, boundary(c));
    CHECK(lhs == rhs);
  }
  // degree-0 case needs no boundary term
  for (int it = 0; it < 10; ++it) {
    auto a = gens[it % gens.size()];
    auto c = random_chain(rng, 1, 1, 0, 3);
    CHECK(lie_action(a, c) == boundary(insertion(a, c)));
  }
}

TEST_CASE("Cartan formula, fully expanded exact instance") {
  auto a = op("y1^2*d1");
  auto c2 = generator_c2n(1, 1);
  auto lhs = lie_action(a, c2);
  auto rhs = boundary(insertion(a, c2));  // b c2 = 0
  CHECK(lhs == rhs);
  CHECK_FALSE(lhs.is_zero());
}

TEST_CASE("chain literal round trip is bit exact") {
  std::mt19937_64 rng(808);
  for (int it = 0; it < 30; ++it) {
    unsigned n = 1 + it % 2, r = 1 + it % 2;
    bool laurent = (it % 3 == 0);
    auto c = random_chain(rng, n, r, 1 + it % 3, 4, laurent);
    CHECK(parse_chain(to_string(c), n, r, laurent) == c);
  }
  CHECK(to_string(parse_chain("1(x)d1(x)y1 - 1(x)y1(x)d1", 1)) ==
        "1\xE2\x8A\x97"
        "d1\xE2\x8A\x97y1 - 1\xE2\x8A\x97y1\xE2\x8A\x97"
        "d1");
}

TEST_CASE("Laurent chains: cycle z^-1 (x) z") {
  auto g = parse_chain("y1^-1(x)y1", 1, 1, true);
  CHECK(boundary(g).is_zero());
}
