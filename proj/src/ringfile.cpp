#include "tc/ringfile.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "tc/errors.hpp"

namespace tc {

namespace {

struct Line {
  int no = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Int parse_int(const std::string& s, int line) {
  std::size_t i = s.size() && s[0] == '-' ? 1 : 0;
  if (i == s.size())
    throw ParseError(line, "expected an integer, got '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ParseError(line, "expected an integer, got '" + s + "'");
  return Int(s);
}

int parse_small(const std::string& s, int line, int lo) {
  const Int v = parse_int(s, line);
  if (v < lo || v > 1000000)
    throw ParseError(line, "value " + s + " out of range");
  return static_cast<int>(v);
}

// coefficient literal: integer, or a/b over field coefficients
Rat parse_coef(const std::string& s, int line) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s, line));
  const Int num = parse_int(s.substr(0, slash), line);
  const Int den = parse_int(s.substr(slash + 1), line);
  if (den == 0) throw ParseError(line, "zero denominator in '" + s + "'");
  return Rat(num) / Rat(den);
}

struct MulLine {
  std::string a, b;
  std::vector<std::string> rhs;
  int line = 0;
};

struct RingSection {
  std::string name;
  int name_line = 0;
  std::optional<CoeffRing> coeff;
  std::optional<int> dim;
  std::vector<BasisElement> basis;  // unit excluded
  bool unit_listed = false;
  std::vector<MulLine> muls;
  std::set<std::pair<std::string, std::string>> seen;
};

void feed_basis(RingSection& sec, const Line& line) {
  for (std::size_t t = 1; t < line.tokens.size(); ++t) {
    const std::string& item = line.tokens[t];
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
      throw ParseError(line.no, "basis item '" + item + "' is not label:degree");
    const std::string label = item.substr(0, colon);
    const int deg = parse_small(item.substr(colon + 1), line.no, 0);
    if (label == "1") {
      if (!sec.basis.empty() || sec.unit_listed)
        throw ParseError(line.no, "the unit must be the first basis element");
      if (deg != 0) throw ParseError(line.no, "the unit must have degree 0");
      sec.unit_listed = true;
      continue;
    }
    if (!valid_label(label))
      throw ParseError(line.no, "bad label '" + label + "'");
    if (deg == 0)
      throw ParseError(line.no,
                       "'" + label + "' has degree 0 but is not the unit");
    sec.basis.push_back({label, deg});
  }
}

void feed(RingSection& sec, const Line& line) {
  const std::string& head = line.tokens[0];
  if (head == "ring") {
    throw ParseError(line.no, "duplicate ring header");
  } else if (head == "coeff") {
    if (line.tokens.size() != 2)
      throw ParseError(line.no, "usage: coeff Z|Q|F_p");
    if (sec.coeff) throw ParseError(line.no, "duplicate coeff directive");
    try {
      sec.coeff = CoeffRing::from_string(line.tokens[1]);
    } catch (const ScalarError& e) {
      throw ParseError(line.no, e.what());
    }
  } else if (head == "dim") {
    if (line.tokens.size() != 2) throw ParseError(line.no, "usage: dim <m>");
    if (sec.dim) throw ParseError(line.no, "duplicate dim directive");
    sec.dim = parse_small(line.tokens[1], line.no, 0);
  } else if (head == "basis") {
    if (line.tokens.size() < 2)
      throw ParseError(line.no, "basis line without items");
    feed_basis(sec, line);
  } else if (head == "mul") {
    if (line.tokens.size() < 4 || line.tokens[2] != "=")
      throw ParseError(line.no, "usage: mul a*b = terms");
    const std::string& prod = line.tokens[1];
    const auto star = prod.find('*');
    if (star == std::string::npos || star == 0 || star + 1 == prod.size())
      throw ParseError(line.no, "left side '" + prod + "' is not a*b");
    MulLine ml;
    ml.a = prod.substr(0, star);
    ml.b = prod.substr(star + 1);
    ml.rhs.assign(line.tokens.begin() + 3, line.tokens.end());
    ml.line = line.no;
    if (!sec.seen.emplace(ml.a, ml.b).second)
      throw ParseError(line.no, "duplicate product " + ml.a + "*" + ml.b);
    sec.muls.push_back(std::move(ml));
  } else {
    throw ParseError(line.no, "unknown directive '" + head + "'");
  }
}

RingPtr finalize(const RingSection& sec, const ParseOptions& opts) {
  if (!sec.coeff)
    throw ParseError(sec.name_line, "ring '" + sec.name + "' has no coeff");
  const CoeffRing coeff = *sec.coeff;

  std::vector<BasisElement> basis{{"1", 0}};
  basis.insert(basis.end(), sec.basis.begin(), sec.basis.end());
  std::map<std::string, int> at;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    if (!at.emplace(basis[i].label, i).second)
      throw ParseError(sec.name_line, "duplicate label '" + basis[i].label +
                                          "' in ring '" + sec.name + "'");

  auto lookup = [&](const std::string& label, int line) {
    auto it = at.find(label);
    if (it == at.end())
      throw ParseError(line, "unknown label '" + label + "'");
    return it->second;
  };

  RawTable raw;
  for (const MulLine& ml : sec.muls) {
    const int ia = lookup(ml.a, ml.line);
    const int ib = lookup(ml.b, ml.line);
    Coords coords;
    if (!(ml.rhs.size() == 1 && ml.rhs[0] == "0")) {
      for (std::size_t t = 0; t < ml.rhs.size(); ++t) {
        if (t % 2 == 1) {
          if (ml.rhs[t] != "+")
            throw ParseError(ml.line, "expected '+' between terms");
          continue;
        }
        const std::string& term = ml.rhs[t];
        Scalar c = Scalar::one(coeff);
        std::string label;
        const auto star = term.find('*');
        if (star != std::string::npos) {
          try {
            c = Scalar::of(coeff, parse_coef(term.substr(0, star), ml.line));
          } catch (const ScalarError& e) {
            throw ParseError(ml.line, e.what());
          }
          label = term.substr(star + 1);
        } else if (term.size() > 1 && term[0] == '-') {
          c = -c;
          label = term.substr(1);
        } else {
          label = term;
        }
        if (label.empty())
          throw ParseError(ml.line, "empty label in term '" + term + "'");
        const int idx = lookup(label, ml.line);
        auto slot = coords.find(idx);
        if (slot == coords.end())
          coords.emplace(idx, c);
        else
          slot->second = slot->second + c;
      }
      if (ml.rhs.size() % 2 == 0)
        throw ParseError(ml.line, "dangling '+'");
    }
    raw[{ia, ib}] = std::move(coords);
  }

  return make_ring(sec.name, coeff, std::move(basis), raw, sec.dim,
                   opts.limits, opts.policy);
}

RingSection open_section(const Line& line) {
  if (line.tokens[0] != "ring" || line.tokens.size() != 2)
    throw ParseError(line.no, "expected 'ring <name>'");
  RingSection sec;
  sec.name = line.tokens[1];
  sec.name_line = line.no;
  return sec;
}

}  // namespace

RingPtr parse_ring(std::istream& in, const ParseOptions& opts) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty ring file");
  RingSection sec = open_section(lines[0]);
  for (std::size_t i = 1; i < lines.size(); ++i) feed(sec, lines[i]);
  return finalize(sec, opts);
}

RingPtr parse_ring_text(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_ring(in, opts);
}

namespace {

std::string scalar_term(const Scalar& c, const std::string& label) {
  if (c.is_one()) return label;
  if (c.ring().kind() != CoeffRing::Kind::PrimeField && (-c).is_one())
    return "-" + label;
  return c.to_string() + "*" + label;
}

}  // namespace

std::string serialize_ring(const RingPtr& r) {
  if (!r) throw ComputeError("null ring");
  std::ostringstream out;
  out << "ring " << (r->name().empty() ? "unnamed" : r->name()) << "\n";
  out << "coeff " << r->coeff().to_string() << "\n";
  if (r->formal_dim()) out << "dim " << *r->formal_dim() << "\n";
  const int n = r->size();
  for (int i = 1; i < n;) {
    out << "basis";
    for (int c = 0; c < 8 && i < n; ++c, ++i)
      out << " " << r->label(i) << ":" << r->degree(i);
    out << "\n";
  }
  for (const auto& [key, coords] : r->table()) {
    out << "mul " << r->label(key.first) << "*" << r->label(key.second)
        << " =";
    bool first = true;
    for (const auto& [idx, c] : coords) {
      out << (first ? " " : " + ") << scalar_term(c, r->label(idx));
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

ManifoldData parse_manifold(std::istream& in, const ParseOptions& opts) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty manifold file");
  if (lines[0].tokens[0] != "manifold" || lines[0].tokens.size() != 2)
    throw ParseError(lines[0].no, "expected 'manifold <name>'");

  ManifoldData d;
  d.name = lines[0].tokens[1];
  std::optional<int> dim;
  std::optional<bool> orientable;
  std::optional<int> pi1;
  struct Hom {
    int deg, rank, line;
    std::vector<Int> tors;
  };
  std::vector<Hom> homs;
  std::set<int> hom_degrees;

  std::size_t i = 1;
  for (; i < lines.size() && lines[i].tokens[0] != "ring"; ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    if (head == "orientable") {
      if (line.tokens.size() != 2 ||
          (line.tokens[1] != "true" && line.tokens[1] != "false"))
        throw ParseError(line.no, "usage: orientable true|false");
      if (orientable) throw ParseError(line.no, "duplicate orientable");
      orientable = line.tokens[1] == "true";
    } else if (head == "pi1rank") {
      if (line.tokens.size() != 2)
        throw ParseError(line.no, "usage: pi1rank <r>");
      if (pi1) throw ParseError(line.no, "duplicate pi1rank");
      pi1 = parse_small(line.tokens[1], line.no, 0);
    } else if (head == "dim") {
      if (line.tokens.size() != 2) throw ParseError(line.no, "usage: dim <m>");
      if (dim) throw ParseError(line.no, "duplicate dim");
      dim = parse_small(line.tokens[1], line.no, 1);
    } else if (head == "homology") {
      if (line.tokens.size() != 2)
        throw ParseError(line.no, "usage: homology <i>:<rank>[,<q>...]");
      const std::string& item = line.tokens[1];
      const auto colon = item.find(':');
      if (colon == std::string::npos)
        throw ParseError(line.no, "homology item needs <i>:<rank>");
      Hom h;
      h.deg = parse_small(item.substr(0, colon), line.no, 0);
      h.line = line.no;
      std::string rest = item.substr(colon + 1);
      std::vector<std::string> parts;
      std::size_t start = 0;
      while (true) {
        const auto comma = rest.find(',', start);
        parts.push_back(rest.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      h.rank = parse_small(parts[0], line.no, 0);
      for (std::size_t t = 1; t < parts.size(); ++t) {
        const Int q = parse_int(parts[t], line.no);
        if (q < 2)
          throw ParseError(line.no, "torsion order must be at least 2");
        h.tors.push_back(q);
      }
      if (!hom_degrees.insert(h.deg).second)
        throw ParseError(line.no, "duplicate homology degree " +
                                      std::to_string(h.deg));
      homs.push_back(std::move(h));
    } else {
      throw ParseError(line.no, "unknown directive '" + head + "'");
    }
  }

  if (!dim) throw ParseError(lines[0].no, "manifold file without dim");
  d.orientable = orientable.value_or(true);
  d.pi1_free_rank = pi1.value_or(0);
  d.profile.dimension = *dim;
  d.profile.free_ranks.assign(*dim + 1, 0);
  d.profile.torsion.assign(*dim + 1, {});
  for (const Hom& h : homs) {
    if (h.deg > *dim)
      throw ParseError(h.line, "homology degree above the dimension");
    d.profile.free_ranks[h.deg] = h.rank;
    d.profile.torsion[h.deg] = h.tors;
  }

  while (i < lines.size()) {
    RingSection sec = open_section(lines[i]);
    ++i;
    for (; i < lines.size() && lines[i].tokens[0] != "ring"; ++i)
      feed(sec, lines[i]);
    RingPtr r = finalize(sec, opts);
    if (!d.rings.emplace(r->coeff(), r).second)
      throw ParseError(sec.name_line, "duplicate presentation over " +
                                          r->coeff().to_string());
  }
  return d;
}

ManifoldData parse_manifold_text(const std::string& text,
                                 const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_manifold(in, opts);
}

std::string serialize_manifold(const ManifoldData& d) {
  std::ostringstream out;
  out << "manifold " << d.name << "\n";
  out << "orientable " << (d.orientable ? "true" : "false") << "\n";
  out << "pi1rank " << d.pi1_free_rank << "\n";
  out << "dim " << d.profile.dimension << "\n";
  for (int i = 0; i <= d.profile.dimension; ++i) {
    if (d.profile.free_ranks[i] == 0 && d.profile.torsion[i].empty()) continue;
    out << "homology " << i << ":" << d.profile.free_ranks[i];
    for (const Int& q : d.profile.torsion[i]) out << "," << q.str();
    out << "\n";
  }
  for (const auto& [coeff, ring] : d.rings) out << serialize_ring(ring);
  return out.str();
}

}  // namespace tc
