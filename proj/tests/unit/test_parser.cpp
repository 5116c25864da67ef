#include <doctest.h>

#include "kfrob/errors.hpp"
#include "kfrob/generators.hpp"
#include "kfrob/split_class.hpp"

using namespace kfrob;

TEST_CASE("split class grammar examples") {
  const auto p1 = RingDescriptor::projective(1);
  CHECK(parse_split_class("1*h(0)", p1) == SplitClass::trivial(p1, 1));

  const auto omega = parse_split_class("2*h(-1) - 1*h(0)", p1);
  CHECK(omega.rank() == 1);
  CHECK_FALSE(omega.effective());
  CHECK(omega.to_string() == "2*h(-1) - 1*h(0)");

  const auto eq = RingDescriptor::projective(1).with_cyclic_order(2);
  CHECK(parse_split_class("1*h(1)@1", eq) == SplitClass::line(eq, {1}, 1));

  const auto p11 = RingDescriptor::product(1, 1);
  CHECK(parse_split_class("h(1,-2) + 3*h(0,0)", p11).rank() == 4);
  CHECK(parse_split_class("-h(2)", p1) == -SplitClass::line(p1, {2}));
  CHECK(parse_split_class("h()", RingDescriptor::point()) == SplitClass::trivial(RingDescriptor::point(), 1));
  // Like terms merge and cancel.
  CHECK(parse_split_class("1*h(1) - 1*h(1)", p1).terms().empty());
}

TEST_CASE("parse errors carry positions") {
  const auto p1 = RingDescriptor::projective(1);
  const auto position_of = [&](const std::string& text) -> long {
    try {
      parse_split_class(text, p1);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("1*h(1") == 5);
  CHECK(position_of("1*g(1)") == 2);
  CHECK(position_of("1*h(1,2)") >= 0);     // wrong arity for P^1
  CHECK(position_of("1*h(1)@1") >= 0);     // character on a plain ring
  CHECK(position_of("1*h(1) 2*h(0)") >= 0);
  CHECK(position_of("") >= 0);
}

TEST_CASE("printer and parser round trip") {
  ClassGenerator gen(8675309);
  for (const auto& ring : {RingDescriptor::projective(2), RingDescriptor::product(1, 2),
                           RingDescriptor::projective(1).with_cyclic_order(5)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = gen.split_class(ring, 4, 4, 5, false);
      CHECK(parse_split_class(x.to_string(), ring) == x);
    }
  }
}
