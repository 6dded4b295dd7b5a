#include <doctest.h>

#include "scoped/effects.hpp"
#include "scoped/errors.hpp"
#include "scoped/prog.hpp"
#include "scoped/value.hpp"

using namespace scoped;

TEST_CASE("values compare structurally") {
  CHECK(intV(3) == intV(3));
  CHECK(intV(3) != intV(4));
  CHECK(Value::unit() == Value::unit());
  CHECK(Value::boolean(true) != Value::boolean(false));
  CHECK(Value::list({intV(1), intV(2)}) == Value::list({intV(1), intV(2)}));
  CHECK(Value::list({intV(1)}) != Value::list({intV(1), intV(1)}));
  CHECK(Value::record("pair", {intV(1), intV(2)}) ==
        Value::record("pair", {intV(1), intV(2)}));
  CHECK(Value::record("pair", {intV(1)}) != Value::record("Just", {intV(1)}));
  CHECK(intV(0) != Value::unit());
}

TEST_CASE("boxed programs compare by tree structure") {
  const Value a = Value::program(ret(intV(5)));
  const Value b = Value::program(ret(intV(5)));
  const Value c = Value::program(ret(intV(6)));
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("rendering") {
  CHECK(intV(43).str() == "43");
  CHECK(Value::boolean(true).str() == "true");
  CHECK(Value::unit().str() == "()");
  CHECK(Value::list({intV(1), intV(2)}).str() == "[1,2]");
  CHECK(Value::list({}).str() == "[]");
  CHECK(just(intV(43)).str() == "Just 43");
  CHECK(nothing().str() == "Nothing");
  CHECK(pairOf(intV(3), intV(4)).str() == "(3, 4)");
  CHECK(pairOf(intV(2), just(intV(7))).str() == "(2, Just 7)");
  CHECK(Value::list({just(intV(1))}).str() == "[Just 1]");
}

TEST_CASE("accessors reject the wrong kind") {
  CHECK_THROWS_AS(Value::unit().asInt(), Error);
  CHECK_THROWS_AS(intV(1).elements(), Error);
  CHECK_THROWS_AS(Value::list({}).tag(), Error);
  CHECK_THROWS_AS(intV(1).prog(), Error);
  CHECK_THROWS_AS(Value::boolean(true).asInt(), Error);
  CHECK_THROWS_AS(intV(1).asBool(), Error);
}

TEST_CASE("concatLists appends without touching its arguments") {
  const Value a = Value::list({intV(1), intV(2)});
  const Value b = Value::list({intV(3)});
  const Value c = Value::concatLists(a, b);
  CHECK(c == Value::list({intV(1), intV(2), intV(3)}));
  CHECK(a == Value::list({intV(1), intV(2)}));
  CHECK(b == Value::list({intV(3)}));
  CHECK(Value::concatLists(Value::list({}), b) == b);
  CHECK(Value::concatLists(a, Value::list({})) == a);
}

TEST_CASE("left-leaning concatenation chains stay linear") {
  Value acc = Value::list({});
  for (int i = 0; i < 20000; ++i)
    acc = Value::concatLists(std::move(acc), Value::list({intV(i % 7)}));
  CHECK(acc.elements().size() == 20000);
  CHECK(acc.elements()[19999] == intV(19999 % 7));
}

TEST_CASE("intRange is half-open") {
  const std::vector<Value> r = intRange(0, 3);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == intV(0));
  CHECK(r[2] == intV(2));
  CHECK(intRange(2, 2).empty());
}
