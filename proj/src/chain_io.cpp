#include "sfill/chain_io.hpp"

#include <set>
#include <sstream>
#include <vector>

namespace sfill {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  try {
    out = std::stoll(s);
  } catch (...) {
    return false;
  }
  return true;
}

bool parse_rational(const std::string& s, Rational& out) {
  auto digits = [](const std::string& t, bool allow_sign) {
    std::size_t i = (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) return false;
  if (num[0] == '+') num = num.substr(1);
  mpz_class p(num), q(den);
  if (q == 0) return false;
  out = Rational(p, q);
  out.canonicalize();
  return true;
}

}  // namespace

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Chain parse_chain(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Field field = Field::F2;
  long long n = 0, d = 0;
  std::vector<Term> terms;
  std::set<Simplex> seen;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks.size() != 3) throw ParseError(lineno, "expected header 'field=<F2|Q> n=<n> d=<d>'");
      auto kv = [&](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0) throw ParseError(lineno, "expected '" + key + "=' in header");
        return tok.substr(key.size() + 1);
      };
      std::string f = kv(toks[0], "field");
      if (f == "F2") field = Field::F2;
      else if (f == "Q") field = Field::Q;
      else throw ParseError(lineno, "unknown field '" + f + "'");
      if (!parse_int(kv(toks[1], "n"), n) || n < 1 || n > kMaxVertex)
        throw ParseError(lineno, "bad n");
      if (!parse_int(kv(toks[2], "d"), d) || d < -1 || d >= n)
        throw ParseError(lineno, "bad d");
      have_header = true;
      continue;
    }
    Rational c;
    if (!parse_rational(toks[0], c)) throw ParseError(lineno, "malformed coefficient '" + toks[0] + "'");
    if (c == 0) throw ParseError(lineno, "zero coefficient");
    if (field == Field::F2) {
      if (c.get_den() != 1 || mpz_even_p(c.get_num().get_mpz_t()))
        throw ParseError(lineno, "F2 coefficient must be odd integer");
      c = 1;
    }
    if (static_cast<long long>(toks.size()) - 1 != d + 1)
      throw ParseError(lineno, "expected " + std::to_string(d + 1) + " vertices");
    std::vector<int> vs;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      long long v;
      if (!parse_int(toks[i], v)) throw ParseError(lineno, "malformed vertex '" + toks[i] + "'");
      if (v < 1 || v > n) throw ParseError(lineno, "vertex " + toks[i] + " outside [1," + std::to_string(n) + "]");
      if (!vs.empty() && v <= vs.back()) throw ParseError(lineno, "vertices not strictly increasing");
      vs.push_back(static_cast<int>(v));
    }
    Simplex s = Simplex::from_vertices(vs);
    if (!seen.insert(s).second) throw ParseError(lineno, "duplicate simplex " + s.to_string());
    terms.push_back({s, c});
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  return Chain::from_terms(field, static_cast<int>(n), static_cast<int>(d), std::move(terms));
}

std::string emit_chain(const Chain& c) {
  std::ostringstream os;
  os << "field=" << field_name(c.field()) << " n=" << c.n() << " d=" << c.dim() << '\n';
  for (const Term& t : c.terms()) {
    os << (c.field() == Field::F2 ? std::string("1") : format_rational(t.coef));
    for (int v : t.simplex.vertices()) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace sfill
