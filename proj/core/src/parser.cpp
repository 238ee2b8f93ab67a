#include "kwb/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace kwb {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

namespace {

/// Recursive-descent expression scanner over one line fragment.
class ExprParser {
 public:
  ExprParser(const Presentation& pres, const std::string& s, int line, int col0)
      : pres_(pres), s_(s), line_(line), col0_(col0) {}

  NcPoly parse() {
    NcPoly out;
    skip_ws();
    if (eof()) fail("expected an expression");
    bool negative = false;
    if (peek() == '-') { negative = true; ++pos_; }
    else if (peek() == '+') ++pos_;
    poly_add(out, negative ? Scalar(-1) : Scalar(1), term());
    skip_ws();
    while (!eof()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      poly_add(out, op == '-' ? Scalar(-1) : Scalar(1), term());
      skip_ws();
    }
    return out;
  }

 private:
  NcPoly term() {
    skip_ws();
    if (eof()) fail("expected a term");
    const int tstart = pos_;
    Scalar coeff(1);
    bool have_word = false;
    bool have_coeff = false;
    Word w;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip_ws();
      if (!eof() && peek() == '*') { ++pos_; }
    }
    skip_ws();
    while (!eof() &&
           (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      const int start = pos_;
      std::string id;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                        peek() == '_' || peek() == '\''))
        id += s_[pos_++];
      const int g = pres_.gen_index(id);
      if (g < 0) fail("unknown generator '" + id + "'", start);
      long power = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = integer();
        if (power < 0) fail("negative power");
      }
      for (long i = 0; i < power; ++i) w.push_back(g);
      have_word = true;
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (eof() || (!std::isalpha(static_cast<unsigned char>(peek())) &&
                      peek() != '_'))
          fail("expected a generator after '*'");
      } else {
        break;
      }
    }
    if (!have_word && !have_coeff) fail("expected a term", tstart);
    NcPoly p;
    if (!is_zero(coeff)) p.emplace(std::move(w), coeff);
    return p;
  }

  Scalar rational() {
    const long num = integer();
    if (!eof() && peek() == '/') {
      ++pos_;
      const long den = integer();
      if (den == 0) fail("zero denominator");
      return Scalar(num) / Scalar(den);
    }
    return Scalar(num);
  }

  long integer() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
      if (v > 1000000000L) fail("number too large");
    }
    return v;
  }

  bool eof() const { return pos_ >= static_cast<int>(s_.size()); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, int at) const {
    throw ParseError(line_, col0_ + at + 1, msg);
  }

  const Presentation& pres_;
  const std::string& s_;
  int pos_ = 0;
  int line_;
  int col0_;
};

int parse_int_field(const std::string& tok, int line, int col, const char* what) {
  try {
    size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, col, std::string("expected an integer ") + what +
                                    ", got '" + tok + "'");
  }
}

}  // namespace

Presentation parse_presentation(const std::string& text,
                                const std::string& fallback_name) {
  Presentation pres;
  pres.name = fallback_name;
  bool saw_field = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    const int kwcol = static_cast<int>(line.find(kw)) + 1;

    if (kw == "name") {
      std::string n;
      if (!(ls >> n)) throw ParseError(lineno, kwcol, "name needs a value");
      pres.name = n;
    } else if (kw == "field") {
      std::string f;
      if (!(ls >> f) || f != "Q")
        throw ParseError(lineno, kwcol, "only 'field Q' is supported");
      saw_field = true;
    } else if (kw == "generator") {
      std::string label, hs, as;
      if (!(ls >> label >> hs >> as))
        throw ParseError(lineno, kwcol, "generator needs: label h a");
      if (pres.gen_index(label) >= 0)
        throw ParseError(lineno, kwcol, "duplicate generator '" + label + "'");
      const int h = parse_int_field(hs, lineno, kwcol, "homological degree");
      const int a = parse_int_field(as, lineno, kwcol, "Adams degree");
      pres.generators.push_back({label, {h, a}});
    } else if (kw == "relation" || kw == "differential") {
      std::string glabel;
      if (kw == "differential" && !(ls >> glabel))
        throw ParseError(lineno, kwcol, "differential needs: generator expression");
      std::string rest;
      std::getline(ls, rest);
      const int col0 = static_cast<int>(line.size() - rest.size());
      NcPoly p = ExprParser(pres, rest, lineno, col0).parse();
      if (kw == "relation") {
        if (p.empty())
          throw ParseError(lineno, kwcol, "relation reduces to zero");
        if (p.count(Word{}))
          throw ParseError(lineno, kwcol, "relation has a constant term");
        if (!pres.poly_degree(p))
          throw ParseError(lineno, kwcol, "relation is not bihomogeneous");
        pres.relations.push_back(std::move(p));
      } else {
        const int g = pres.gen_index(glabel);
        if (g < 0)
          throw ParseError(lineno, kwcol, "unknown generator '" + glabel + "'");
        if (pres.differential.count(g))
          throw ParseError(lineno, kwcol,
                          "second differential for '" + glabel + "'");
        if (!p.empty()) {
          const auto d = pres.poly_degree(p);
          const Bidegree expected = pres.generators[g].deg + Bidegree{-1, 0};
          if (!d || *d != expected)
            throw ParseError(lineno, kwcol, "differential of '" + glabel +
                                                "' must have bidegree " +
                                                to_string(expected));
          pres.differential.emplace(g, std::move(p));
        }
      }
    } else {
      throw ParseError(lineno, kwcol, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_field) throw ParseError(lineno, 1, "missing 'field Q' directive");

  const auto problems = pres.validate();
  if (!problems.empty()) throw ParseError(lineno, 1, problems.front());
  return pres;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  std::string stem = path;
  if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
    stem.erase(0, slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
    stem.resize(dot);
  try {
    return parse_presentation(buf.str(), stem);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace kwb
