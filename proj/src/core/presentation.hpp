#ifndef HH2_PRESENTATION_HPP
#define HH2_PRESENTATION_HPP

#include <string>
#include <vector>

#include "core/quiver.hpp"

namespace hh2 {

// A textual algebra presentation: quiver + ground field + relations + path order.
// Invariants: relations are non-zero, uniform, and supported on paths of
// length >= 2 (the ideal sits inside the square of the arrow ideal).
struct Presentation {
  std::string name;
  Quiver quiver;
  Field field;
  std::vector<FreeElement> relations;
  std::vector<std::string> relation_labels;  // parallel to relations
  PathOrder order;
  std::vector<std::string> order_listed_arrows;  // names in the order stanza, if any
};

struct ParseError : Error {
  int line, col;
  ParseError(int line, int col, const std::string& msg)
      : Error(Error::Kind::parse,
              "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

// Grammar (UTF-8 text, '#' starts a comment, one relation per line):
//   file        := header stanza*
//   header      := ('algebra' STRING?)? 'field' ('rational' | 'prime' INT)
//   stanza      := vertices | arrows | relations | order
//   vertices    := 'vertices' IDENT+
//   arrows      := 'arrows' (IDENT ':' IDENT '->' IDENT)+
//   relations   := 'relations' relation+
//   relation    := term (('+'|'-') term)*
//   term        := (COEFF '*')? IDENT ('.' IDENT)*
//   order       := 'order' 'arrows' IDENT+ ('vertices' IDENT+)?
//   COEFF       := INT | INT '/' INT
// Order lists run from greatest to least precedence.
Presentation parse_presentation(const std::string& text);

std::string print_presentation(const Presentation& p);

struct Finding {
  enum class Kind { duplicate_relation, reducible_relation, incomplete_order };
  Kind kind;
  std::string detail;
};

std::vector<Finding> validate(const Presentation& p);

}  // namespace hh2

#endif
