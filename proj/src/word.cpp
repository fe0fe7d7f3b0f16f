#include "dyer/word.hpp"

#include <sstream>

namespace dyer {

bool syllable_less(const Syllable& a, const Syllable& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return exp_less(a.exp, b.exp);
}

bool word_less(const SyllableWord& a, const SyllableWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].gen != b[i].gen) return a[i].gen < b[i].gen;
    if (a[i].exp != b[i].exp) return exp_less(a[i].exp, b[i].exp);
  }
  return false;
}

static int reduce_exp(int exp, int f) {
  if (f == kInf) return exp;
  exp %= f;
  if (exp < 0) exp += f;
  return exp;
}

SyllableWord normalize(const DyerGraph& g, const SyllableWord& w) {
  SyllableWord out;
  for (const Syllable& s : w) {
    if (s.gen < 0 || s.gen >= g.size()) throw domain_error("word: generator out of range");
    int exp = s.exp;
    while (!out.empty() && out.back().gen == s.gen) {
      exp += out.back().exp;
      out.pop_back();
    }
    exp = reduce_exp(exp, g.f(s.gen));
    if (exp != 0) out.push_back({s.gen, exp});
  }
  return out;
}

SyllableWord inverse(const SyllableWord& w) {
  SyllableWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

SyllableWord concat(const SyllableWord& a, const SyllableWord& b) {
  SyllableWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string format_word(const DyerGraph& g, const SyllableWord& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << g.id(w[i].gen);
    if (w[i].exp != 1) os << '^' << w[i].exp;
  }
  return os.str();
}

SyllableWord parse_word(const DyerGraph& g, const std::string& text) {
  SyllableWord out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    int exp = 1;
    std::string id = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      id = tok.substr(0, caret);
      const std::string tail = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(tail);
      } catch (const std::exception&) {
        throw parse_error("bad exponent in token '" + tok + "'");
      }
    }
    auto v = g.find(id);
    if (!v) throw parse_error("unknown generator '" + id + "'");
    if (exp == 0) continue;
    out.push_back({*v, exp});
  }
  return out;
}

}  // namespace dyer
