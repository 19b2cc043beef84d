#include <doctest.h>

#include <set>

#include "edgecodes/gf.hpp"

using namespace edgecodes::gf;

namespace {

std::vector<unsigned> supported_sizes() {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= 256; ++q) {
    try {
      Field::make(q);
      out.push_back(q);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  auto f = Field::make(5);
  CHECK(f->add(3, 4) == 2);
  CHECK(f->mul(3, 4) == 2);
  CHECK(f->inv(2) == 3);
  CHECK(f->inv(1) == 1);
  for (Code a = 0; a < 5; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
  }
  CHECK(f->nonzero_elements().size() == 4);
  CHECK(Field::make(3)->nonzero_elements() == std::vector<Code>{1, 2});
}

TEST_CASE("GF(4) with alpha^2 = alpha + 1") {
  auto f = Field::make(4);
  CHECK(f->reduction_polynomial() == std::vector<unsigned>{1, 1, 1});
  const Code alpha = 2, alpha1 = 3;
  CHECK(f->to_string(alpha) == "a");
  CHECK(f->to_string(alpha1) == "a+1");
  CHECK(f->add(alpha, alpha) == 0);
  CHECK(f->mul(alpha, alpha) == alpha1);

  // Inverse found by searching the reference product over all nonzero codes.
  Code found = 0;
  for (Code b = 1; b < 4; ++b)
    if (f->mul_reference(alpha, b) == 1) found = b;
  CHECK(found == alpha1);
  CHECK(f->inv(alpha) == found);

  const auto units = f->nonzero_elements();
  CHECK(units.size() == 3);
  CHECK(std::set<Code>(units.begin(), units.end()) == std::set<Code>{1, alpha, alpha1});
}

TEST_CASE("sizes accepted and rejected") {
  for (unsigned q : {0u, 1u, 6u, 10u, 12u, 15u, 100u, 257u}) CHECK_THROWS_AS(Field::make(q), std::invalid_argument);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 121u, 169u, 251u, 256u}) CHECK_NOTHROW(Field::make(q));
  CHECK(prime_power(81) == std::pair<unsigned, unsigned>{3, 4});
  CHECK_THROWS(prime_power(18));
}

TEST_CASE("reduction polynomials are irreducible") {
  for (unsigned q : supported_sizes()) {
    auto f = Field::make(q);
    if (f->is_prime()) continue;
    CAPTURE(q);
    CHECK(f->reduction_polynomial().size() == f->e() + 1);
    CHECK(f->reduction_polynomial().back() == 1);
    CHECK(is_irreducible(f->reduction_polynomial(), f->p()));
  }
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // x^2 + 1 = (x + 1)^2
  CHECK_FALSE(is_irreducible({0, 1, 1}, 3));
  CHECK(is_irreducible({1, 0, 1}, 3));        // x^2 + 1
  CHECK_FALSE(is_irreducible({2, 0, 1}, 3));  // x^2 - 1
}

TEST_CASE("Lagrange: a^(q-1) = 1 for q <= 16") {
  for (unsigned q : supported_sizes()) {
    if (q > 16) break;
    auto f = Field::make(q);
    for (unsigned a = 1; a < q; ++a) CHECK(f->pow(Code(a), q - 1) == 1);
  }
}

TEST_CASE("field axioms exhaustively for q <= 9") {
  for (unsigned q : supported_sizes()) {
    if (q > 9) break;
    CAPTURE(q);
    auto f = Field::make(q);
    bool ok = true;
    for (unsigned a = 0; a < q; ++a) {
      ok &= f->add(Code(a), f->neg(Code(a))) == 0;
      if (a) ok &= f->mul(Code(a), f->inv(Code(a))) == 1;
      for (unsigned b = 0; b < q; ++b) {
        ok &= f->add(Code(a), Code(b)) == f->add(Code(b), Code(a));
        ok &= f->mul(Code(a), Code(b)) == f->mul(Code(b), Code(a));
        for (unsigned c = 0; c < q; ++c) {
          ok &= f->add(f->add(Code(a), Code(b)), Code(c)) == f->add(Code(a), f->add(Code(b), Code(c)));
          ok &= f->mul(f->mul(Code(a), Code(b)), Code(c)) == f->mul(Code(a), f->mul(Code(b), Code(c)));
          ok &= f->mul(Code(a), f->add(Code(b), Code(c))) ==
                f->add(f->mul(Code(a), Code(b)), f->mul(Code(a), Code(c)));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("multiplication table agrees with polynomial multiplication") {
  for (unsigned q : supported_sizes()) {
    auto f = Field::make(q);
    if (f->is_prime()) continue;
    CAPTURE(q);
    bool ok = true;
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) ok &= f->mul(Code(a), Code(b)) == f->mul_reference(Code(a), Code(b));
    CHECK(ok);
  }
}

TEST_CASE("enumeration order is the powers of the smallest generator") {
  for (unsigned q : supported_sizes()) {
    auto f = Field::make(q);
    CAPTURE(q);
    const auto units = f->nonzero_elements();
    REQUIRE(units.size() == q - 1);
    CHECK(std::set<Code>(units.begin(), units.end()).size() == q - 1);
    for (std::size_t i = 0; i < units.size(); ++i) {
      CHECK(units[i] == f->pow(f->generator(), i));
      if (units[i] != 0) CHECK(f->log(units[i]) == i);
    }
    // No smaller code generates the group.
    for (unsigned g = 2; g < f->generator(); ++g) {
      unsigned order = 1;
      for (Code x = Code(g); x != 1; x = f->mul(x, Code(g))) ++order;
      CHECK(order < q - 1);
    }
  }
}

TEST_CASE("elements from different fields do not mix") {
  auto f5 = Field::make(5);
  auto f7 = Field::make(7);
  Elem a(f5, 2), b(f7, 2);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
  CHECK((a * Elem(f5, 3)).value() == 1);
  CHECK(inv(a) == Elem(f5, 3));
  CHECK_THROWS(Elem(f5, 0).inv());
  CHECK_THROWS(Elem(f5, 5));
  CHECK(nonzero_elements(f5).size() == 4);
}
