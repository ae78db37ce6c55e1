#include "treenergy/tree_spec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "treenergy/errors.hpp"

namespace treenergy {

TreeSpec TreeSpec::path(int n) {
  TreeSpec s;
  s.kind = Kind::Path;
  s.n = n;
  return s;
}

TreeSpec TreeSpec::starlike(int n, std::vector<int> arms) {
  TreeSpec s;
  s.kind = Kind::Starlike;
  s.n = n;
  s.arms = std::move(arms);
  return s;
}

TreeSpec TreeSpec::double_broom(int n, int a, int b, int c, int d) {
  TreeSpec s;
  s.kind = Kind::DoubleBroom;
  s.n = n;
  s.a = a;
  s.b = b;
  s.c = c;
  s.d = d;
  return s;
}

TreeSpec TreeSpec::explicit_edges(int n, std::vector<std::pair<int, int>> edges) {
  TreeSpec s;
  s.kind = Kind::Explicit;
  s.n = n;
  s.edges = std::move(edges);
  return s;
}

namespace {

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw InvalidSpec("expected integer in tree spec: " + s);
  return std::stoi(s.substr(start, pos - start));
}

void expect(const std::string& s, size_t& pos, char ch) {
  if (pos >= s.size() || s[pos] != ch)
    throw InvalidSpec(std::string("expected '") + ch + "' in tree spec: " + s);
  ++pos;
}

}  // namespace

TreeSpec TreeSpec::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 4) throw InvalidSpec("tree spec too short: " + text);
  size_t pos = 1;
  char kind = s[0];
  expect(s, pos, '(');
  int n = parse_int(s, pos);
  switch (kind) {
    case 'P': {
      expect(s, pos, ')');
      return path(n);
    }
    case 'S': {
      expect(s, pos, ';');
      std::vector<int> arms;
      arms.push_back(parse_int(s, pos));
      while (pos < s.size() && s[pos] == ',') {
        ++pos;
        arms.push_back(parse_int(s, pos));
      }
      expect(s, pos, ')');
      return starlike(n, std::move(arms));
    }
    case 'T': {
      expect(s, pos, ';');
      int a = parse_int(s, pos);
      expect(s, pos, ',');
      int b = parse_int(s, pos);
      expect(s, pos, '|');
      int c = parse_int(s, pos);
      expect(s, pos, ',');
      int d = parse_int(s, pos);
      expect(s, pos, ')');
      return double_broom(n, a, b, c, d);
    }
    case 'E': {
      expect(s, pos, ';');
      std::vector<std::pair<int, int>> edges;
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        return explicit_edges(n, {});
      }
      while (true) {
        int u = parse_int(s, pos);
        expect(s, pos, '-');
        int v = parse_int(s, pos);
        edges.emplace_back(u, v);
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      expect(s, pos, ')');
      return explicit_edges(n, std::move(edges));
    }
    default:
      throw InvalidSpec("unknown tree spec kind: " + text);
  }
}

std::string TreeSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Path:
      os << "P(" << n << ")";
      break;
    case Kind::Starlike: {
      os << "S(" << n << ";";
      for (size_t i = 0; i < arms.size(); ++i) {
        if (i) os << ",";
        os << arms[i];
      }
      os << ")";
      break;
    }
    case Kind::DoubleBroom:
      os << "T(" << n << ";" << a << "," << b << "|" << c << "," << d << ")";
      break;
    case Kind::Explicit: {
      os << "E(" << n << ";";
      for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ",";
        os << edges[i].first << "-" << edges[i].second;
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

Forest build(const TreeSpec& spec) {
  switch (spec.kind) {
    case TreeSpec::Kind::Path: {
      if (spec.n < 1) throw InvalidSpec("path order must be positive");
      return Forest::path(spec.n);
    }
    case TreeSpec::Kind::Starlike: {
      if (spec.arms.empty()) throw InvalidSpec("starlike tree needs at least one arm");
      long total = 0;
      for (int a : spec.arms) {
        if (a < 1) throw InvalidSpec("starlike arm lengths must be positive");
        total += a;
      }
      if (total != spec.n - 1)
        throw InvalidSpec("starlike arm lengths must sum to n-1");
      std::vector<std::pair<int, int>> edges;
      int next = 1;
      for (int a : spec.arms) {
        int prev = 0;
        for (int i = 0; i < a; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      return Forest::from_edges(spec.n, std::move(edges));
    }
    case TreeSpec::Kind::DoubleBroom: {
      if (spec.a < 1 || spec.b < 1 || spec.c < 1 || spec.d < 1)
        throw InvalidSpec("double broom arm lengths must be positive");
      long arm_sum = static_cast<long>(spec.a) + spec.b + spec.c + spec.d;
      if (arm_sum > spec.n - 2)
        throw InvalidSpec("double broom arms leave no room for the middle path");
      int m = spec.n - static_cast<int>(arm_sum);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
      int next = m;
      auto attach = [&](int at, int len) {
        int prev = at;
        for (int i = 0; i < len; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      };
      attach(0, spec.a);
      attach(0, spec.b);
      attach(m - 1, spec.c);
      attach(m - 1, spec.d);
      return Forest::from_edges(spec.n, std::move(edges));
    }
    case TreeSpec::Kind::Explicit:
      return Forest::from_edges(spec.n, spec.edges);
  }
  throw InvalidSpec("unreachable tree spec kind");
}

std::optional<TreeSpec> recognize(const Forest& tree) {
  if (!tree.is_tree()) return std::nullopt;
  TreeClassification c = classify(tree);
  int n = tree.order();
  if (c.tree_class == TreeClass::C1) return TreeSpec::path(n);
  if (!c.arms.empty()) return TreeSpec::starlike(n, c.arms);
  if (c.n3 != 2 || c.max_degree != 3) return std::nullopt;

  // double broom with two degree-3 ends: collect the two pendant-path
  // pairs hanging off the branch vertices
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (tree.degree(v) >= 3) branch.push_back(v);
  }
  auto arm_lengths = [&](int center) {
    std::vector<int> lens;
    for (int start : tree.adjacency()[center]) {
      int len = 1, prev = center, cur = start;
      while (tree.degree(cur) == 2) {
        for (int w : tree.adjacency()[cur]) {
          if (w != prev) {
            prev = cur;
            cur = w;
            break;
          }
        }
        ++len;
      }
      if (tree.degree(cur) == 1) lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  };
  std::vector<int> p1 = arm_lengths(branch[0]);
  std::vector<int> p2 = arm_lengths(branch[1]);
  if (p1.size() != 2 || p2.size() != 2) return std::nullopt;
  if (p1 < p2) std::swap(p1, p2);
  return TreeSpec::double_broom(n, p1[0], p1[1], p2[0], p2[1]);
}

Forest parse_graph6(const std::string& g6) {
  size_t pos = 0;
  if (g6.rfind(">>graph6<<", 0) == 0) pos = 10;
  if (pos >= g6.size()) throw InvalidSpec("empty graph6 string");
  long n;
  auto val = [&](size_t i) -> int {
    if (i >= g6.size()) throw InvalidSpec("truncated graph6 string");
    int c = static_cast<unsigned char>(g6[i]) - 63;
    if (c < 0 || c > 63) throw InvalidSpec("invalid graph6 character");
    return c;
  };
  if (val(pos) < 63) {
    n = val(pos);
    pos += 1;
  } else {
    ++pos;
    if (val(pos) < 63) {
      n = (static_cast<long>(val(pos)) << 12) | (val(pos + 1) << 6) | val(pos + 2);
      pos += 3;
    } else {
      throw InvalidSpec("graph6 order too large");
    }
  }
  if (n < 1) throw InvalidSpec("graph6 order must be positive");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int chunk = val(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
      ++bit;
    }
  }
  return Forest::from_edges(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Forest& f) {
  int n = f.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int nbits = n * (n - 1) / 2;
  std::vector<int> bits;
  bits.reserve(nbits);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(f.has_edge(i, j) ? 1 : 0);
  }
  for (int start = 0; start < nbits; start += 6) {
    int chunk = 0;
    for (int k = 0; k < 6; ++k) {
      chunk <<= 1;
      if (start + k < nbits) chunk |= bits[start + k];
    }
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

Forest parse_forest(const std::string& text) {
  if (!text.empty() && (text[0] == 'P' || text[0] == 'S' || text[0] == 'T' || text[0] == 'E') &&
      text.find('(') != std::string::npos) {
    return build(TreeSpec::parse(text));
  }
  return parse_graph6(text);
}

}  // namespace treenergy
