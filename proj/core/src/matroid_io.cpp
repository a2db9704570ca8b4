#include "matfp/matroid_io.hpp"

#include <sstream>
#include <vector>

namespace matfp {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError,
                std::string("expected integer for ") + what + ", got '" + s +
                    "'");
  }
}

int parse_keyed_int(const std::string& token, const std::string& key) {
  if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0)
    throw Error(Errc::ParseError, "expected '" + key + "<int>', got '" +
                                      token + "'");
  return parse_int(token.substr(key.size()), key.c_str());
}

}  // namespace

SubsetMask parse_set(const std::string& text) {
  if (text == "-") return 0;
  if (text.empty()) throw Error(Errc::ParseError, "empty set literal");
  SubsetMask m = 0;
  for (const std::string& tok : split(text, ',')) {
    int e = parse_int(tok, "set element");
    if (e < 0 || e >= kMaxGround)
      throw Error(Errc::ParseError,
                  "element " + tok + " outside [0,16)");
    m |= 1u << e;
  }
  return m;
}

std::string render_matroid_full(const Matroid& m) {
  std::string out = "MATROID n=" + std::to_string(m.size()) +
                    " r=" + std::to_string(m.rank()) + "\nbases=";
  bool first = true;
  for (SubsetMask b : m.bases()) {
    if (!first) out += ';';
    first = false;
    out += render_set(b);
  }
  out += '\n';
  return out;
}

std::string revlex_basis_string(const Matroid& m) {
  std::string s;
  if (m.rank() == 0) return m.is_basis(0) ? "1" : "0";
  SubsetMask a = full_mask(m.rank());
  const SubsetMask limit = m.ground();
  while (a) {
    s += m.is_basis(a) ? '1' : '0';
    a = next_k_subset(a, limit);
  }
  return s;
}

std::string render_matroid_compact(const Matroid& m) {
  return std::to_string(m.size()) + " " + std::to_string(m.rank()) + " " +
         revlex_basis_string(m) + "\n";
}

std::string render_matroid(const Matroid& m, TextFormat f) {
  return f == TextFormat::Full ? render_matroid_full(m)
                               : render_matroid_compact(m);
}

Matroid matroid_from_revlex(int n, int r, const std::string& s) {
  if (n < 0 || n > kMaxGround)
    throw Error(Errc::GroundSetOverflow, "n outside [0,16]");
  if (r < 0 || r > n) throw Error(Errc::RankOutOfRange, "r outside [0,n]");
  std::vector<SubsetMask> bases;
  std::size_t i = 0;
  auto take = [&](SubsetMask a) {
    if (i >= s.size())
      throw Error(Errc::ParseError, "indicator string too short");
    char c = s[i++];
    if (c != '0' && c != '1')
      throw Error(Errc::ParseError,
                  std::string("indicator characters must be 0/1, got '") + c +
                      "'");
    if (c == '1') bases.push_back(a);
  };
  if (r == 0) {
    take(0);
  } else {
    SubsetMask a = full_mask(r);
    const SubsetMask limit = full_mask(n);
    while (a) {
      take(a);
      a = next_k_subset(a, limit);
    }
  }
  if (i != s.size())
    throw Error(Errc::ParseError, "indicator string too long");
  return Matroid::from_bases(n, r, std::move(bases));
}

Matroid parse_matroid(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  if (!(in >> first)) throw Error(Errc::ParseError, "empty matroid input");
  if (first == "MATROID") {
    std::string ntok, rtok, basesline;
    if (!(in >> ntok >> rtok))
      throw Error(Errc::ParseError, "expected 'MATROID n=<int> r=<int>'");
    int n = parse_keyed_int(ntok, "n=");
    int r = parse_keyed_int(rtok, "r=");
    if (!(in >> basesline))
      throw Error(Errc::ParseError, "missing bases= line");
    const std::string key = "bases=";
    if (basesline.compare(0, key.size(), key) != 0)
      throw Error(Errc::ParseError, "expected 'bases=...', got '" +
                                        basesline + "'");
    std::vector<SubsetMask> bases;
    std::string body = basesline.substr(key.size());
    if (body.empty())
      throw Error(Errc::EmptyBasisList, "a matroid has at least one basis");
    for (const std::string& tok : split(body, ';'))
      bases.push_back(parse_set(tok));
    return Matroid::from_bases(n, r, std::move(bases));
  }
  // Compact: "<n> <r> <s>".
  int n = parse_int(first, "n");
  std::string rtok, s;
  if (!(in >> rtok >> s))
    throw Error(Errc::ParseError, "expected '<n> <r> <indicator>'");
  int r = parse_int(rtok, "r");
  return matroid_from_revlex(n, r, s);
}

}  // namespace matfp
