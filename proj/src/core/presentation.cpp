#include "core/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "core/matrix.hpp"

namespace hh2 {

namespace {

struct Token {
  enum class Kind { ident, integer, string, sym, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string s, int l, int c) {
      tokens_.push_back(Token{k, std::move(s), l, c});
    };
    while (i < text.size()) {
      char ch = text[i];
      if (ch == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (ch == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        ++col;
        continue;
      }
      int c0 = col;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string s;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
          s += text[i++];
          ++col;
        }
        push(Token::Kind::ident, std::move(s), line, c0);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string s;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          s += text[i++];
          ++col;
        }
        push(Token::Kind::integer, std::move(s), line, c0);
        continue;
      }
      if (ch == '"') {
        std::string s;
        ++i;
        ++col;
        while (i < text.size() && text[i] != '"' && text[i] != '\n') {
          s += text[i++];
          ++col;
        }
        if (i == text.size() || text[i] != '"')
          throw ParseError(line, c0, "unterminated string");
        ++i;
        ++col;
        push(Token::Kind::string, std::move(s), line, c0);
        continue;
      }
      if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
        push(Token::Kind::sym, "->", line, c0);
        i += 2;
        col += 2;
        continue;
      }
      if (std::string(":+-*./").find(ch) != std::string::npos) {
        push(Token::Kind::sym, std::string(1, ch), line, c0);
        ++i;
        ++col;
        continue;
      }
      throw ParseError(line, c0, std::string("unexpected character '") + ch + "'");
    }
    tokens_.push_back(Token{Token::Kind::end, "", line, col});
  }

  const Token& peek(int ahead = 0) const {
    size_t j = pos_ + ahead;
    return j < tokens_.size() ? tokens_[j] : tokens_.back();
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

bool is_keyword(const std::string& s) {
  static const std::set<std::string> kw = {"algebra", "field",     "vertices",
                                           "arrows",  "relations", "order"};
  return kw.count(s) > 0;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

long parse_int(Lexer& lx) {
  Token t = lx.next();
  if (t.kind != Token::Kind::integer) fail(t, "expected an integer");
  return std::stol(t.text);
}

Scalar parse_coeff(Lexer& lx, const Field& field, bool negate) {
  long num = parse_int(lx);
  long den = 1;
  if (lx.peek().kind == Token::Kind::sym && lx.peek().text == "/") {
    lx.next();
    den = parse_int(lx);
    if (den == 0) fail(lx.peek(), "zero denominator in coefficient");
  }
  Scalar c = field.from_fraction(num, den);
  return negate ? field.neg(c) : c;
}

// term := (COEFF '*')? IDENT ('.' IDENT)*
std::pair<Scalar, Path> parse_term(Lexer& lx, const Quiver& q, const Field& field, bool negate) {
  Scalar coeff = negate ? field.from_long(-1) : field.one();
  if (lx.peek().kind == Token::Kind::integer) {
    coeff = parse_coeff(lx, field, negate);
    Token star = lx.next();
    if (star.kind != Token::Kind::sym || star.text != "*") fail(star, "expected '*' after coefficient");
  }
  Path p;
  bool first = true;
  while (true) {
    Token t = lx.next();
    if (t.kind != Token::Kind::ident) fail(t, "expected an arrow name");
    int a = q.find_arrow(t.text);
    if (a < 0) {
      if (q.find_vertex(t.text) >= 0)
        fail(t, "relation contains the trivial path '" + t.text +
                    "' (paths in relations must have length >= 2)");
      fail(t, "unknown arrow '" + t.text + "'");
    }
    if (first) {
      p = Path::of_arrow(q, a);
      first = false;
    } else {
      if (p.terminus != q.arrow(a).src)
        fail(t, "non-composable path: '" + t.text + "' does not start where the previous arrow ends");
      p.arrows.push_back(a);
      p.terminus = q.arrow(a).dst;
    }
    if (lx.peek().kind == Token::Kind::sym && lx.peek().text == ".") {
      lx.next();
      continue;
    }
    break;
  }
  if (p.length() < 2) {
    Token t = lx.peek();
    fail(t, "relation contains a path of length < 2");
  }
  return {coeff, p};
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Lexer lx(text);
  Presentation pres;
  pres.field = Field(0);

  // header
  if (lx.peek().kind == Token::Kind::ident && lx.peek().text == "algebra") {
    lx.next();
    if (lx.peek().kind == Token::Kind::string) pres.name = lx.next().text;
  }
  {
    Token t = lx.next();
    if (t.kind != Token::Kind::ident || t.text != "field") fail(t, "expected 'field'");
    Token mode = lx.next();
    if (mode.kind == Token::Kind::ident && mode.text == "rational") {
      pres.field = Field(0);
    } else if (mode.kind == Token::Kind::ident && mode.text == "prime") {
      long p = parse_int(lx);
      if (p < 2 || !is_prime(static_cast<unsigned long>(p)))
        fail(mode, "field characteristic must be prime, got " + std::to_string(p));
      pres.field = Field(static_cast<unsigned long>(p));
    } else {
      fail(mode, "expected 'rational' or 'prime <p>'");
    }
  }

  std::vector<std::string> order_arrows, order_vertices;
  bool saw_vertices = false, saw_arrows = false;

  while (!lx.at_end()) {
    Token kw = lx.next();
    if (kw.kind != Token::Kind::ident || !is_keyword(kw.text))
      fail(kw, "expected a stanza keyword (vertices/arrows/relations/order)");
    if (kw.text == "vertices") {
      saw_vertices = true;
      while (lx.peek().kind == Token::Kind::ident && !is_keyword(lx.peek().text))
        pres.quiver.add_vertex(lx.next().text);
    } else if (kw.text == "arrows") {
      if (!saw_vertices) fail(kw, "'arrows' stanza before 'vertices'");
      saw_arrows = true;
      while (lx.peek().kind == Token::Kind::ident && !is_keyword(lx.peek().text) &&
             lx.peek(1).kind == Token::Kind::sym && lx.peek(1).text == ":") {
        Token name = lx.next();
        lx.next();  // ':'
        Token src = lx.next();
        if (src.kind != Token::Kind::ident) fail(src, "expected source vertex");
        Token ar = lx.next();
        if (ar.kind != Token::Kind::sym || ar.text != "->") fail(ar, "expected '->'");
        Token dst = lx.next();
        if (dst.kind != Token::Kind::ident) fail(dst, "expected target vertex");
        int s = pres.quiver.find_vertex(src.text);
        if (s < 0) fail(src, "unknown vertex '" + src.text + "'");
        int d = pres.quiver.find_vertex(dst.text);
        if (d < 0) fail(dst, "unknown vertex '" + dst.text + "'");
        pres.quiver.add_arrow(name.text, s, d);
      }
    } else if (kw.text == "relations") {
      if (!saw_arrows) fail(kw, "'relations' stanza before 'arrows'");
      while ((lx.peek().kind == Token::Kind::ident && !is_keyword(lx.peek().text)) ||
             lx.peek().kind == Token::Kind::integer ||
             (lx.peek().kind == Token::Kind::sym && lx.peek().text == "-")) {
        int line = lx.peek().line;
        std::vector<std::pair<Scalar, Path>> terms;
        bool negate = false;
        if (lx.peek().kind == Token::Kind::sym && lx.peek().text == "-") {
          lx.next();
          negate = true;
        }
        terms.push_back(parse_term(lx, pres.quiver, pres.field, negate));
        while (lx.peek().line == line && lx.peek().kind == Token::Kind::sym &&
               (lx.peek().text == "+" || lx.peek().text == "-")) {
          bool neg = lx.next().text == "-";
          terms.push_back(parse_term(lx, pres.quiver, pres.field, neg));
        }
        FreeElement rel = FreeElement::make(pres.field, std::move(terms));
        if (rel.is_zero()) throw ParseError(line, 1, "relation is zero after canonicalization");
        if (!rel.is_uniform()) throw ParseError(line, 1, "non-uniform relation (terms have differing endpoints)");
        pres.relations.push_back(std::move(rel));
        pres.relation_labels.push_back("r" + std::to_string(pres.relations.size()));
      }
    } else if (kw.text == "order") {
      Token t = lx.next();
      if (t.kind != Token::Kind::ident || t.text != "arrows") fail(t, "expected 'arrows'");
      while (lx.peek().kind == Token::Kind::ident && !is_keyword(lx.peek().text))
        order_arrows.push_back(lx.next().text);
      if (lx.peek().kind == Token::Kind::ident && lx.peek().text == "vertices") {
        lx.next();
        while (lx.peek().kind == Token::Kind::ident && !is_keyword(lx.peek().text))
          order_vertices.push_back(lx.next().text);
      }
    } else {
      fail(kw, "unexpected keyword '" + kw.text + "'");
    }
  }

  // Build the path order: listed names (greatest first), unlisted ones follow
  // in declaration order.
  auto build_ranks = [](int count, const std::vector<std::string>& listed,
                        const std::function<int(const std::string&)>& lookup,
                        const char* what) {
    std::vector<int> rank(count, -1);
    int next = 0;
    for (const auto& name : listed) {
      int id = lookup(name);
      if (id < 0) throw Error(Error::Kind::parse, std::string("order lists unknown ") + what + " '" + name + "'");
      if (rank[id] >= 0)
        throw Error(Error::Kind::parse, std::string("order lists ") + what + " '" + name + "' twice");
      rank[id] = next++;
    }
    for (int i = 0; i < count; ++i)
      if (rank[i] < 0) rank[i] = next++;
    return rank;
  };
  std::vector<int> arank = build_ranks(
      pres.quiver.arrow_count(), order_arrows,
      [&](const std::string& n) { return pres.quiver.find_arrow(n); }, "arrow");
  std::vector<int> vrank = build_ranks(
      pres.quiver.vertex_count(), order_vertices,
      [&](const std::string& n) { return pres.quiver.find_vertex(n); }, "vertex");
  pres.order = PathOrder::from_ranks(std::move(arank), std::move(vrank));
  pres.order_listed_arrows = std::move(order_arrows);
  return pres;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "algebra";
  if (!p.name.empty()) os << " \"" << p.name << "\"";
  os << " field ";
  if (p.field.characteristic() == 0)
    os << "rational";
  else
    os << "prime " << p.field.characteristic();
  os << "\n";

  os << "vertices";
  for (int v = 0; v < p.quiver.vertex_count(); ++v) os << " " << p.quiver.vertex_name(v);
  os << "\narrows";
  for (int a = 0; a < p.quiver.arrow_count(); ++a) {
    const Arrow& ar = p.quiver.arrow(a);
    os << " " << ar.name << ": " << p.quiver.vertex_name(ar.src) << " -> "
       << p.quiver.vertex_name(ar.dst);
  }
  os << "\norder arrows";
  {
    std::vector<int> by_rank(p.quiver.arrow_count());
    for (int a = 0; a < p.quiver.arrow_count(); ++a) by_rank[p.order.arrow_rank(a)] = a;
    for (int a : by_rank) os << " " << p.quiver.arrow(a).name;
  }
  os << " vertices";
  {
    std::vector<int> by_rank(p.quiver.vertex_count());
    for (int v = 0; v < p.quiver.vertex_count(); ++v) by_rank[p.order.vertex_ranks()[v]] = v;
    for (int v : by_rank) os << " " << p.quiver.vertex_name(v);
  }
  os << "\nrelations\n";
  for (const auto& r : p.relations) os << "  " << r.str(p.quiver) << "\n";
  return os.str();
}

std::vector<Finding> validate(const Presentation& p) {
  std::vector<Finding> out;

  // Duplicates up to a scalar.
  auto proportional = [&](const FreeElement& a, const FreeElement& b) {
    if (a.terms().size() != b.terms().size()) return false;
    Scalar ratio;
    bool have = false;
    for (size_t i = 0; i < a.terms().size(); ++i) {
      if (a.terms()[i].second != b.terms()[i].second) return false;
      Scalar r = p.field.div(b.terms()[i].first, a.terms()[i].first);
      if (!have) {
        ratio = r;
        have = true;
      } else if (r != ratio) {
        return false;
      }
    }
    return true;
  };
  for (size_t i = 0; i < p.relations.size(); ++i)
    for (size_t j = i + 1; j < p.relations.size(); ++j)
      if (proportional(p.relations[i], p.relations[j]))
        out.push_back({Finding::Kind::duplicate_relation,
                       p.relation_labels[i] + " and " + p.relation_labels[j] +
                           " agree up to a scalar"});

  // Advisory: relations lying in the ideal generated by the others (checked in
  // a bounded-length window, so absence of a finding is not a proof).
  int max_len = 0;
  for (const auto& r : p.relations) max_len = std::max(max_len, r.max_term_length());
  int window = max_len + 1;
  std::vector<Path> paths = enumerate_paths(p.quiver, window, p.order);
  std::map<std::vector<int>, int> col_of;  // key: origin then arrows
  auto key_of = [](const Path& q) {
    std::vector<int> k;
    k.push_back(q.origin);
    k.insert(k.end(), q.arrows.begin(), q.arrows.end());
    return k;
  };
  for (size_t i = 0; i < paths.size(); ++i) col_of[key_of(paths[i])] = static_cast<int>(i);
  auto to_vec = [&](const FreeElement& f) {
    std::map<int, Scalar> entries;
    for (const auto& [c, q] : f.terms()) entries.emplace(col_of.at(key_of(q)), c);
    return SparseVec(entries.begin(), entries.end());
  };
  for (size_t i = 0; i < p.relations.size(); ++i) {
    Rref<> span(p.field, static_cast<int>(paths.size()));
    for (size_t j = 0; j < p.relations.size(); ++j) {
      if (j == i) continue;
      const FreeElement& g = p.relations[j];
      int room = window - g.max_term_length();
      for (const auto& u : paths) {
        if (u.length() > room) continue;
        if (u.terminus != g.origin()) continue;
        FreeElement ug = kq_multiply(p.field, FreeElement::of_path(p.field, u), g);
        for (const auto& v : paths) {
          if (u.length() + v.length() > room) continue;
          if (v.origin != g.terminus()) continue;
          FreeElement ugv = kq_multiply(p.field, ug, FreeElement::of_path(p.field, v));
          if (!ugv.is_zero()) span.add_row(to_vec(ugv));
        }
      }
    }
    if (span.contains(to_vec(p.relations[i])))
      out.push_back({Finding::Kind::reducible_relation,
                     p.relation_labels[i] + " is a consequence of the other relations"});
  }

  if (!p.order_listed_arrows.empty() &&
      static_cast<int>(p.order_listed_arrows.size()) < p.quiver.arrow_count())
    out.push_back({Finding::Kind::incomplete_order,
                   "order stanza lists " + std::to_string(p.order_listed_arrows.size()) + " of " +
                       std::to_string(p.quiver.arrow_count()) + " arrows"});
  return out;
}

}  // namespace hh2
