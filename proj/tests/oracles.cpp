#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using ribbon::ArrowPresentation;
using ribbon::Circle;
using ribbon::Sign;

FlagModel flag_model(const ArrowPresentation& g) {
  FlagModel m;
  std::vector<std::size_t> base;  // first occurrence index of each circle
  std::size_t n = 0;
  for (const Circle& c : g.circles()) {
    base.push_back(n);
    n += c.size();
    if (c.empty()) ++m.isolated;
  }
  m.tau0.assign(2 * n, 0);
  m.tau1.assign(2 * n, 0);
  m.tau2.assign(2 * n, 0);
  m.edge_of_flag.assign(2 * n, 0);

  std::map<std::string, std::vector<std::size_t>> where;
  std::map<std::string, std::vector<Sign>> signs;
  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    const Circle& circ = g.circles()[c];
    for (std::size_t i = 0; i < circ.size(); ++i) {
      const std::size_t h = base[c] + i;
      const std::size_t next = base[c] + (i + 1) % circ.size();
      m.tau0[2 * h + 1] = 2 * next;
      m.tau0[2 * next] = 2 * h + 1;
      m.tau2[2 * h] = 2 * h + 1;
      m.tau2[2 * h + 1] = 2 * h;
      where[circ[i].label].push_back(h);
      signs[circ[i].label].push_back(circ[i].sign);
    }
  }
  std::size_t e = 0;
  for (const auto& [label, hs] : where) {
    if (hs.size() != 2) throw std::logic_error("label not paired");
    const std::size_t a = hs[0], b = hs[1];
    const bool twisted = signs[label][0] != signs[label][1];
    if (twisted) {
      m.tau1[2 * a] = 2 * b;
      m.tau1[2 * b] = 2 * a;
      m.tau1[2 * a + 1] = 2 * b + 1;
      m.tau1[2 * b + 1] = 2 * a + 1;
    } else {
      m.tau1[2 * a] = 2 * b + 1;
      m.tau1[2 * b + 1] = 2 * a;
      m.tau1[2 * a + 1] = 2 * b;
      m.tau1[2 * b] = 2 * a + 1;
    }
    for (std::size_t f : {2 * a, 2 * a + 1, 2 * b, 2 * b + 1}) m.edge_of_flag[f] = e;
    ++e;
  }
  m.num_edges = e;
  return m;
}

FaceInfo faces(const ArrowPresentation& g) {
  const FlagModel m = flag_model(g);
  FaceInfo info;
  info.edge_sides.resize(m.num_edges);
  std::vector<bool> seen(m.tau0.size(), false);
  for (std::size_t start = 0; start < m.tau0.size(); ++start) {
    if (seen[start]) continue;
    const std::size_t face = info.sizes.size();
    std::size_t size = 0;
    std::size_t x = start;
    do {
      seen[x] = true;
      const std::size_t y = m.tau0[x];
      seen[y] = true;
      x = m.tau1[y];
      info.edge_sides[m.edge_of_flag[y]].push_back(face);
      ++size;
    } while (x != start);
    info.sizes.push_back(size);
  }
  info.count = info.sizes.size() + m.isolated;
  return info;
}

std::size_t components(const ArrowPresentation& g) {
  const std::size_t v = g.num_vertices();
  std::vector<std::vector<std::size_t>> adj(v);
  std::map<std::string, std::vector<std::size_t>> where;
  for (std::size_t c = 0; c < v; ++c) {
    for (const auto& a : g.circles()[c]) where[a.label].push_back(c);
  }
  for (const auto& [label, cs] : where) {
    adj[cs[0]].push_back(cs[1]);
    adj[cs[1]].push_back(cs[0]);
  }
  std::vector<bool> seen(v, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < v; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

int genus(const ArrowPresentation& g) {
  return 2 * static_cast<int>(components(g)) - static_cast<int>(g.num_vertices()) +
         static_cast<int>(g.num_edges()) - static_cast<int>(faces(g).count);
}

bool eulerian(const ArrowPresentation& g) {
  return std::all_of(g.circles().begin(), g.circles().end(), [](const Circle& c) { return c.size() % 2 == 0; });
}

bool even_face(const ArrowPresentation& g) {
  const auto info = faces(g);
  return std::all_of(info.sizes.begin(), info.sizes.end(), [](std::size_t s) { return s % 2 == 0; });
}

bool checkerboard(const ArrowPresentation& g) {
  const auto info = faces(g);
  const std::size_t f = info.sizes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
    bool ok = true;
    for (const auto& sides : info.edge_sides) {
      if (((mask >> sides[0]) & 1) == ((mask >> sides[1]) & 1)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool bipartite(const ArrowPresentation& g) {
  const std::size_t v = g.num_vertices();
  std::map<std::string, std::vector<std::size_t>> where;
  for (std::size_t c = 0; c < v; ++c) {
    for (const auto& a : g.circles()[c]) where[a.label].push_back(c);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << v); ++mask) {
    bool ok = true;
    for (const auto& [label, cs] : where) {
      if (((mask >> cs[0]) & 1) == ((mask >> cs[1]) & 1)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

namespace {

using Token = std::pair<int, int>;  // label id, sign
using Raw = std::vector<std::vector<Token>>;

Raw to_raw(const ArrowPresentation& g) {
  std::map<std::string, int> id;
  Raw r;
  for (const Circle& c : g.circles()) {
    std::vector<Token> circle;
    for (const auto& a : c) {
      auto [it, fresh] = id.emplace(a.label, static_cast<int>(id.size()));
      circle.push_back({it->second, a.sign == Sign::Plus ? 1 : -1});
    }
    r.push_back(circle);
  }
  return r;
}

Raw renamed(const Raw& r) {
  std::map<int, int> id;
  Raw out = r;
  for (auto& c : out) {
    for (auto& t : c) {
      auto [it, fresh] = id.emplace(t.first, static_cast<int>(id.size()));
      t.first = it->second;
    }
  }
  return out;
}

std::string spell(const Raw& r) {
  std::string s;
  for (const auto& c : r) {
    s += '(';
    for (const auto& t : c) {
      s += std::to_string(t.first);
      s += t.second > 0 ? '+' : '-';
    }
    s += ')';
  }
  return s;
}

}  // namespace

std::string orbit_key(const ArrowPresentation& g) {
  const Raw start = renamed(to_raw(g));
  std::set<Raw> seen{start};
  std::deque<Raw> queue{start};
  auto push = [&](Raw r) {
    r = renamed(r);
    if (seen.insert(r).second) queue.push_back(std::move(r));
  };
  while (!queue.empty()) {
    const Raw r = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c].size() > 1) {
        Raw rot = r;
        std::rotate(rot[c].begin(), rot[c].begin() + 1, rot[c].end());
        push(rot);
      }
      Raw rev = r;
      std::reverse(rev[c].begin(), rev[c].end());
      for (auto& t : rev[c]) t.second = -t.second;
      push(rev);
      if (c + 1 < r.size()) {
        Raw sw = r;
        std::swap(sw[c], sw[c + 1]);
        push(sw);
      }
    }
    std::set<int> labels;
    for (const auto& c : r) {
      for (const auto& t : c) labels.insert(t.first);
    }
    for (int label : labels) {
      Raw fl = r;
      for (auto& c : fl) {
        for (auto& t : c) {
          if (t.first == label) t.second = -t.second;
        }
      }
      push(fl);
    }
  }
  std::string best;
  for (const Raw& r : seen) {
    const std::string s = spell(r);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<ArrowPresentation> raw_presentations(std::size_t edges, std::size_t circles, bool connected) {
  std::vector<ArrowPresentation> out;
  const std::size_t n = 2 * edges;
  if (circles == 0 || n < circles) return out;

  std::vector<std::vector<int>> words;
  std::vector<int> word;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& uses) {
    if (word.size() == n) {
      words.push_back(word);
      return;
    }
    int next_new = 0;
    while (next_new < static_cast<int>(edges) && uses[next_new] > 0) ++next_new;
    for (int l = 0; l < static_cast<int>(edges); ++l) {
      if (uses[l] == 2) continue;
      if (uses[l] == 0 && l != next_new) continue;
      ++uses[l];
      word.push_back(l);
      grow(uses);
      word.pop_back();
      --uses[l];
    }
  };
  std::vector<int> uses(edges, 0);
  grow(uses);

  std::vector<std::vector<std::size_t>> cuts;
  std::vector<std::size_t> cut;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (cut.size() == circles - 1) {
      cuts.push_back(cut);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cut.push_back(i);
      choose(i + 1);
      cut.pop_back();
    }
  };
  choose(1);

  for (const auto& w : words) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (const auto& cs : cuts) {
        std::vector<Circle> result(1);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (k < cs.size() && cs[k] == i) {
            result.emplace_back();
            ++k;
          }
          result.back().push_back({std::string(1, static_cast<char>('a' + w[i])),
                                   ((mask >> i) & 1) ? Sign::Minus : Sign::Plus});
        }
        ArrowPresentation g(std::move(result));
        if (connected && components(g) != 1) continue;
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

ArrowPresentation parse(const std::string& inline_form) {
  std::vector<Circle> circles;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const char s = token.back();
    if (s != '+' && s != '-') throw std::invalid_argument("bad token " + token);
    circles.back().push_back({token.substr(0, token.size() - 1), s == '+' ? Sign::Plus : Sign::Minus});
    token.clear();
  };
  for (char ch : inline_form) {
    if (ch == '(') {
      circles.emplace_back();
    } else if (ch == ')' || ch == ' ') {
      flush();
    } else {
      token += ch;
    }
  }
  return ArrowPresentation(std::move(circles));
}

}  // namespace oracle
