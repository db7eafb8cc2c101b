#include "elliptica/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "elliptica/error.hpp"

namespace elliptica {

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, int line, int column_offset)
      : s_(s), line_(line), offset_(column_offset) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    auto ok = [&](char c, bool first) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!first && std::isdigit(static_cast<unsigned char>(c)));
    };
    while (pos_ < s_.size() && ok(s_[pos_], pos_ == start)) ++pos_;
    if (start == pos_) fail("expected a variable name");
    return std::string(s_.substr(start, pos_ - start));
  }
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw ParseError(what, line_, column());
  }
  [[noreturn]] void fail_at(std::size_t p, const std::string& what) {
    pos_ = p;
    throw ParseError(what, line_, column());
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;
};

bool starts_identifier(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

int to_int(Cursor& cur, const std::string& digits, std::size_t at) {
  if (digits.size() > 6) cur.fail_at(at, "number too large");
  return std::stoi(digits);
}

Term parse_term(Cursor& cur, const ContextPtr& ctx) {
  Term t{Monomial::one(ctx->size()), Rational(1)};
  bool need_factor = true;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    cur.skip_ws();
    std::size_t at = cur.pos();
    Integer num(cur.digits());
    Integer den(1);
    if (cur.accept('/')) {
      den = Integer(cur.digits());
      if (den == 0) cur.fail_at(at, "zero denominator");
    }
    t.coefficient = Rational(num, den);
    need_factor = cur.accept('*');
  }
  while (need_factor) {
    cur.skip_ws();
    std::size_t at = cur.pos();
    if (!starts_identifier(cur.peek())) cur.fail("expected a variable name");
    std::string name = cur.identifier();
    auto idx = ctx->index_of(name);
    if (!idx) cur.fail_at(at, "unknown variable " + name);
    int e = 1;
    if (cur.accept('^')) {
      cur.skip_ws();
      std::size_t eat = cur.pos();
      e = to_int(cur, cur.digits(), eat);
    }
    t.monomial.exponents[*idx] += e;
    need_factor = cur.accept('*');
  }
  return t;
}

}  // namespace

Polynomial parse_polynomial(const ContextPtr& ctx, std::string_view text, int line,
                            int column_offset) {
  Cursor cur(text, line, column_offset);
  if (cur.done()) cur.fail("empty polynomial");
  std::vector<Term> terms;
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected + or -");
    }
    Term t = parse_term(cur, ctx);
    if (negative) t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
    first = false;
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.context()->names();
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      int e = t.monomial.exponents[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
    first = false;
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  std::optional<ContextPtr> ctx;
  std::optional<std::pair<std::string, int>> rels_line;  // body and line number
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t colon = line.find(':', first);
    std::string key = colon == std::string::npos ? "" : line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (key == "vars") {
      if (ctx) throw ParseError("duplicate vars line", line_no, static_cast<int>(first) + 1);
      std::vector<std::string> names;
      std::vector<int> weights;
      std::size_t pos = colon + 1;
      while (true) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string::npos) break;
        std::size_t end = line.find_first_of(" \t", pos);
        std::string item = line.substr(pos, end == std::string::npos ? end : end - pos);
        int col = static_cast<int>(pos) + 1;
        std::size_t sep = item.find(':');
        if (sep == std::string::npos || sep == 0)
          throw ParseError("expected name:weight", line_no, col);
        std::string name = item.substr(0, sep);
        if (!starts_identifier(name[0]))
          throw ParseError("invalid variable name " + name, line_no, col);
        for (char c : name)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError("invalid variable name " + name, line_no, col);
        std::string w = item.substr(sep + 1);
        int wcol = col + static_cast<int>(sep) + 1;
        bool numeric = !w.empty() && w.size() <= 6 &&
                       w.find_first_not_of("0123456789") == std::string::npos;
        if (!numeric) throw ParseError("weight must be positive even", line_no, wcol);
        int weight = std::stoi(w);
        if (weight <= 0 || weight % 2 != 0)
          throw ParseError("weight must be positive even", line_no, wcol);
        names.push_back(std::move(name));
        weights.push_back(weight);
        if (end == std::string::npos) break;
        pos = end;
      }
      if (names.empty()) throw ParseError("vars line declares no variables", line_no, static_cast<int>(colon) + 2);
      try {
        ctx = GradedContext::make(std::move(names), std::move(weights));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, static_cast<int>(first) + 1);
      }
    } else if (key == "rels") {
      if (rels_line) throw ParseError("duplicate rels line", line_no, static_cast<int>(first) + 1);
      rels_line = {line, line_no};
    } else {
      throw ParseError("expected 'vars:' or 'rels:'", line_no, static_cast<int>(first) + 1);
    }
  }
  if (!ctx) throw ParseError("missing vars line", line_no + 1, 1);
  if (!rels_line) throw ParseError("missing rels line", line_no + 1, 1);

  const auto& [body, rline] = *rels_line;
  std::vector<Polynomial> rels;
  std::size_t start = body.find(':') + 1;
  while (true) {
    std::size_t semi = body.find(';', start);
    std::size_t len = semi == std::string::npos ? std::string::npos : semi - start;
    rels.push_back(parse_polynomial(*ctx, std::string_view(body).substr(start, len), rline,
                                    static_cast<int>(start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return Presentation(*ctx, std::move(rels));
}

Presentation parse_presentation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  std::string out = "vars:";
  const GradedContext& ctx = p.ctx();
  for (std::size_t i = 0; i < ctx.size(); ++i)
    out += " " + ctx.names()[i] + ":" + std::to_string(ctx.weight(i));
  out += "\nrels:";
  for (std::size_t j = 0; j < p.size(); ++j) {
    out += (j == 0 ? " " : " ; ") + format_polynomial(p.relations()[j]);
  }
  out += "\n";
  return out;
}

DegreeType parse_degree_type(std::string_view text) {
  Cursor cur(text, 1, 0);
  auto sequence = [&](char stop) {
    std::vector<int> v;
    do {
      cur.skip_ws();
      std::size_t at = cur.pos();
      v.push_back(to_int(cur, cur.digits(), at));
    } while (cur.accept(','));
    if (stop != '\0' && !cur.accept(stop)) cur.fail(std::string("expected '") + stop + "'");
    return v;
  };
  bool paren = cur.accept('(');
  std::vector<int> a;
  if (paren) {
    a = sequence(';');
  } else {
    a = sequence(':');
  }
  std::vector<int> b = sequence(paren ? ')' : '\0');
  if (!cur.done()) cur.fail("unexpected trailing input");
  return make_degree_type(std::move(a), std::move(b));
}

namespace {
std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}
}  // namespace

std::string format_degree_type(const DegreeType& dt) {
  return "(" + join(dt.generators) + ";" + join(dt.relations) + ")";
}

std::string degree_type_literal(const DegreeType& dt) {
  return join(dt.generators) + ":" + join(dt.relations);
}

}  // namespace elliptica
