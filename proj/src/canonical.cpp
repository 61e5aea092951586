#include "ribbon/canonical.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ribbon {

namespace {

// Integer view of a presentation: labels renumbered, signs as +1/-1.
struct Compact {
  std::vector<std::vector<int>> label;
  std::vector<std::vector<int>> sign;
  std::vector<std::array<Location, 2>> where;
};

Compact compact(const ArrowPresentation& g) {
  Compact out;
  std::unordered_map<Label, int> id;
  out.label.resize(g.num_vertices());
  out.sign.resize(g.num_vertices());
  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    for (std::size_t p = 0; p < g.circles()[c].size(); ++p) {
      const Arrow& a = g.circles()[c][p];
      auto [it, fresh] = id.emplace(a.label, static_cast<int>(out.where.size()));
      if (fresh) {
        out.where.push_back({Location{c, p}, Location{c, p}});
      } else {
        out.where[it->second][1] = {c, p};
      }
      out.label[c].push_back(it->second);
      out.sign[c].push_back(a.sign == Sign::Plus ? 1 : -1);
    }
  }
  return out;
}

using Code = std::vector<int>;

// Reads the component containing `start` beginning at arrow `pos`, walking in
// direction `dir`. Circles are visited breadth first in discovery order; a newly
// discovered circle starts at the arrow that discovered it and is read in the
// direction that gives that label equal signs at both ends. Each label is
// normalised so its first arrow reads '+'.
Code encode_from(const Compact& g, std::size_t start, std::size_t pos, int dir) {
  std::vector<int> new_id(g.where.size(), -1);
  std::vector<int> first_sign(g.where.size(), 0);
  std::vector<char> queued(g.label.size(), 0);
  struct Frame {
    std::size_t circle, pos;
    int dir;
  };
  std::deque<Frame> queue{{start, pos, dir}};
  queued[start] = 1;
  int next = 0;
  Code code;

  while (!queue.empty()) {
    const Frame f = queue.front();
    queue.pop_front();
    code.push_back(-1);
    const std::size_t n = g.label[f.circle].size();
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t p = f.dir > 0 ? (f.pos + t) % n : (f.pos + n - t) % n;
      const int l = g.label[f.circle][p];
      const int s = g.sign[f.circle][p] * f.dir;
      if (new_id[l] < 0) {
        new_id[l] = next++;
        first_sign[l] = s;
        code.push_back(2 * new_id[l]);
        const auto& w = g.where[l];
        const Location other = (w[0].circle == f.circle && w[0].position == p) ? w[1] : w[0];
        if (!queued[other.circle]) {
          queued[other.circle] = 1;
          const int raw = g.sign[other.circle][other.position];
          queue.push_back({other.circle, other.position, raw == s ? 1 : -1});
        }
      } else {
        code.push_back(2 * new_id[l] + (s * first_sign[l] < 0 ? 1 : 0));
      }
    }
  }
  return code;
}

std::string spell(const std::vector<Code>& components) {
  std::string out;
  int offset = 0;
  for (const Code& code : components) {
    int used = 0;
    bool open = false;
    bool first_in_circle = true;
    for (int token : code) {
      if (token < 0) {
        if (open) out += ')';
        out += '(';
        open = true;
        first_in_circle = true;
        continue;
      }
      if (!first_in_circle) out += ' ';
      first_in_circle = false;
      const int id = token / 2;
      used = std::max(used, id + 1);
      out += std::to_string(offset + id);
      out += (token % 2 == 0) ? '+' : '-';
    }
    if (open) out += ')';
    offset += used;
  }
  return out;
}

}  // namespace

CanonicalForm canonicalize(const ArrowPresentation& g) {
  const Compact cg = compact(g);
  const UnderlyingGraph ug = underlying_graph(g);

  std::vector<Code> best(ug.num_components);
  std::vector<char> seen(ug.num_components, 0);
  for (std::size_t c = 0; c < cg.label.size(); ++c) {
    const std::size_t comp = ug.component[c];
    const std::size_t n = cg.label[c].size();
    if (n == 0) {
      best[comp] = Code{-1};
      seen[comp] = 1;
      continue;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (int dir : {1, -1}) {
        Code code = encode_from(cg, c, p, dir);
        if (!seen[comp] || code < best[comp]) {
          best[comp] = std::move(code);
          seen[comp] = 1;
        }
      }
    }
  }
  std::sort(best.begin(), best.end());
  return CanonicalForm(spell(best));
}

bool is_equivalent(const ArrowPresentation& g, const ArrowPresentation& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  return canonicalize(g) == canonicalize(h);
}

ArrowPresentation from_canonical(const CanonicalForm& form) {
  const std::string& s = form.str();
  std::vector<Circle> circles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("malformed canonical form: " + s);
    ++i;
    Circle circle;
    while (i < s.size() && s[i] != ')') {
      if (s[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      if (j == s.size()) throw std::invalid_argument("malformed canonical form: " + s);
      circle.push_back({s.substr(i, j - i), s[j] == '+' ? Sign::Plus : Sign::Minus});
      i = j + 1;
    }
    if (i == s.size()) throw std::invalid_argument("malformed canonical form: " + s);
    ++i;
    circles.push_back(std::move(circle));
  }
  return ArrowPresentation(std::move(circles));
}

std::string graph_key(const UnderlyingGraph& graph) {
  const std::size_t n = graph.num_vertices;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const UnderlyingEdge& e : graph.edges) {
    ++mult[e.u][e.v];
    if (e.u != e.v) ++mult[e.v][e.u];
  }

  // Vertices are only permuted within classes of equal (degree, loop count).
  std::vector<std::pair<int, int>> signature(n);
  for (std::size_t v = 0; v < n; ++v) {
    signature[v] = {static_cast<int>(graph.degrees[v]), mult[v][v]};
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return signature[a] > signature[b] || (signature[a] == signature[b] && a < b);
  });

  std::vector<std::size_t> block_start;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || signature[perm[i]] != signature[perm[i - 1]]) block_start.push_back(i);
  }
  block_start.push_back(n);

  std::vector<int> best;
  bool have = false;
  // Enumerate the product of permutations of every block.
  std::function<void(std::size_t)> recurse = [&](std::size_t block) {
    if (block + 1 == block_start.size()) {
      std::vector<int> code;
      code.reserve(n * (n + 1) / 2);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) code.push_back(mult[perm[i]][perm[j]]);
      }
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(block_start[block]);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(block_start[block + 1]);
    std::sort(first, last);
    do {
      recurse(block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(0);

  std::string key = std::to_string(n) + ":";
  for (std::size_t i = 0; i < n; ++i) {
    key += std::to_string(signature[perm[i]].first);
    key += ',';
  }
  key += '|';
  for (int m : best) {
    key += std::to_string(m);
    key += ',';
  }
  return key;
}

bool is_graph_isomorphic(const ArrowPresentation& g, const ArrowPresentation& h) {
  return graph_key(underlying_graph(g)) == graph_key(underlying_graph(h));
}

}  // namespace ribbon
