#include "monreg_cli/catalog.hpp"

namespace monreg::cli::catalog {

namespace {

constexpr std::string_view kIntro = R"(# hypergraph with two 3-edges
ring: a b c d e f g
order: lex g f d a b c e
ideal: a*b*c a*c*d a*e e*f f*g
form f1: g + f
form f2: d + a
form f3: a + c + e
)";

constexpr std::string_view kSixEdge = R"(ring: a b c d e f
ideal: a*b b*c b*d c*d d*e e*f
form good: f + e
form bad: a + b
)";

constexpr std::string_view kSixEdgeSquares = R"(ring: a b c d e f
ideal: a^2*b b*c^2 b*d^2 c*d d*e e*f
form f1: a + b
)";

constexpr std::string_view kPath6 = R"(ring: a b c d e f g
ideal: a*b b*c c*d d*e e*f f*g
form f1: a + b
form f2: g + f
)";

constexpr std::string_view kPath3 = R"(ring: a b c d
ideal: a*b b*c c*d
form f1: a + b
form f2: d + c
form g: b + a + c
)";

constexpr std::string_view kPentagonPath = R"(# pentagon a-b-c-d-e with the tail a-f-g-h
ring: a b c d e f g h
ideal: a*b b*c c*d d*e a*e a*f f*g g*h
form f: h + g
)";

constexpr std::string_view kTree8 = R"(ring: x1 x2 x3 x4 x5 x6 x7 x8
ideal: x1*x2 x2*x3 x3*x4 x4*x5 x4*x6 x6*x7 x7*x8
form f1: x1 + x2
form f2: x5 + x4
form f3: x8 + x7
)";

constexpr std::string_view kTree13 = R"(ring: x1 x2 x3 x4 x5 x6 x7 x8 x9 x10 x11 x12 x13
order: lex x1 x13 x5 x9 x2 x12 x6 x8 x4 x10
ideal: x1*x2 x2*x3 x3*x4 x4*x5 x5*x6 x4*x7 x7*x8 x8*x9 x9*x10 x10*x11 x11*x12 x12*x13
form f1: x1 + x2
form f2: x13 + x12
form g1: x5 + x6 + x4
form g2: x9 + x8 + x10
)";

constexpr std::string_view kPentagon = R"(ring: x1 x2 x3 x4 x5
order: lex x1 x2 x5 x3 x4
ideal: x1*x2 x2*x3 x3*x4 x4*x5 x1*x5
form f: x1 + x2 + x5
)";

constexpr std::string_view kStar = R"(ring: b0 b1 b2 b3 b4 b5 x1 x2 x3 x4
ideal: b0*b1 b0*b2 b0*b3 b0*b4 b0*b5 b1*x1 b2*x2 b3*x3 b4*x4
form f: b0 + b1 + b2 + b3 + b4 + b5
)";

constexpr std::string_view kColonCounterexample = R"(ring: a b x1 x2 x3 x4 y1 y2 y3 y4
ideal: a*b b*x1*y1 b*x2*y2 b*x3*y3 b*x4*y4 x1*x2*x3*x4 y1*y2*y3*y4
form f: a + b
)";

constexpr std::string_view kTriangle = R"(ring: x1 x2 x3
ideal: x1*x2 x2*x3 x1*x3
)";

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {"intro", kIntro},
      {"six-edge", kSixEdge},
      {"six-edge-squares", kSixEdgeSquares},
      {"path-6", kPath6},
      {"path-3", kPath3},
      {"pentagon-path", kPentagonPath},
      {"tree-8", kTree8},
      {"tree-13", kTree13},
      {"pentagon", kPentagon},
      {"star", kStar},
      {"colon-counterexample", kColonCounterexample},
      {"triangle", kTriangle},
  };
  return all;
}

ProblemFile load(std::string_view key) {
  for (const Entry& e : entries()) {
    if (e.key == key) return parse_problem(e.text);
  }
  throw InvalidArgument("unknown catalog entry '" + std::string(key) + "'");
}

}  // namespace monreg::cli::catalog
