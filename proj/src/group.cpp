#include "coarsedim/group.hpp"

#include <cctype>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace coarsedim {

WordBall word_ball_bfs(const MarkedGroup& group, int radius, size_t cap) {
  WordBall ball;
  ball.radius = radius;
  ball.elements.push_back(group.identity);
  ball.length.push_back(0);
  ball.index[group.identity] = 0;
  std::deque<size_t> frontier{0};
  while (!frontier.empty()) {
    size_t cur = frontier.front();
    frontier.pop_front();
    if (ball.length[cur] == radius) continue;
    for (const auto& g : group.gens) {
      std::string next = group.mul(ball.elements[cur], g);
      if (ball.index.count(next)) continue;
      if (ball.elements.size() >= cap)
        throw ResourceLimit("word_ball: ball size exceeds cap");
      ball.index[next] = ball.elements.size();
      ball.elements.push_back(next);
      ball.length.push_back(ball.length[cur] + 1);
      frontier.push_back(ball.index[next]);
    }
  }
  return ball;
}

FiniteMetricSpace word_ball_space(const MarkedGroup& group, const WordBall& ball) {
  auto b = std::make_shared<WordBall>(ball);
  auto g = std::make_shared<MarkedGroup>(group);
  return FiniteMetricSpace(
      ball.elements, [b, g](size_t i, size_t j) -> std::optional<Rat> {
        std::string diff = g->mul(g->inv(b->elements[i]), b->elements[j]);
        auto it = b->index.find(diff);
        if (it == b->index.end()) return std::nullopt;
        return Rat(b->length[it->second]);
      });
}

namespace {

std::vector<long long> parse_vec(const std::string& s) {
  std::vector<long long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
  return v;
}

std::string format_vec(const std::vector<long long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

MarkedGroup make_z() {
  MarkedGroup g;
  g.name = "z";
  g.identity = "0";
  g.mul = [](const std::string& a, const std::string& b) {
    return std::to_string(std::stoll(a) + std::stoll(b));
  };
  g.inv = [](const std::string& a) { return std::to_string(-std::stoll(a)); };
  g.gens = {"1", "-1"};
  return g;
}

MarkedGroup make_zn(int n) {
  MarkedGroup g;
  g.name = "z" + std::to_string(n);
  g.identity = format_vec(std::vector<long long>(n, 0));
  g.mul = [](const std::string& a, const std::string& b) {
    auto va = parse_vec(a), vb = parse_vec(b);
    for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
    return format_vec(va);
  };
  g.inv = [](const std::string& a) {
    auto v = parse_vec(a);
    for (auto& x : v) x = -x;
    return format_vec(v);
  };
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    g.gens.push_back(format_vec(e));
    e[i] = -1;
    g.gens.push_back(format_vec(e));
  }
  return g;
}

MarkedGroup make_free(int rank) {
  if (rank < 1 || rank > 26) throw std::domain_error("make_free: rank in [1,26]");
  MarkedGroup g;
  g.name = "free" + std::to_string(rank);
  g.identity = "";
  auto reduce_append = [](std::string w, char c) {
    auto inverse_of = [](char a) { return static_cast<char>(std::islower(a) ? std::toupper(a) : std::tolower(a)); };
    if (!w.empty() && w.back() == inverse_of(c)) w.pop_back();
    else w.push_back(c);
    return w;
  };
  g.mul = [reduce_append](const std::string& a, const std::string& b) {
    std::string w = a;
    for (char c : b) w = reduce_append(w, c);
    return w;
  };
  g.inv = [](const std::string& a) {
    std::string w;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
      w.push_back(std::islower(*it) ? std::toupper(*it) : std::tolower(*it));
    return w;
  };
  for (int i = 0; i < rank; ++i) {
    g.gens.push_back(std::string(1, static_cast<char>('a' + i)));
    g.gens.push_back(std::string(1, static_cast<char>('A' + i)));
  }
  return g;
}

MarkedGroup group_from_json_text(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  auto elements = doc.at("elements").get<std::vector<std::string>>();
  auto table = doc.at("mul").get<std::vector<std::vector<size_t>>>();
  auto gens = doc.at("gens").get<std::vector<std::string>>();
  size_t n = elements.size();
  if (table.size() != n) throw std::domain_error("group_from_json: table size mismatch");
  auto idx = std::make_shared<std::unordered_map<std::string, size_t>>();
  for (size_t i = 0; i < n; ++i) (*idx)[elements[i]] = i;
  // Identity: the unique e with e*x = x for all x.
  size_t id = n;
  for (size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (size_t j = 0; j < n && ok; ++j) ok = table[i][j] == j;
    if (ok) { id = i; break; }
  }
  if (id == n) throw std::domain_error("group_from_json: no identity in table");
  auto names = std::make_shared<std::vector<std::string>>(elements);
  auto tbl = std::make_shared<std::vector<std::vector<size_t>>>(table);
  MarkedGroup g;
  g.name = "table";
  g.identity = elements[id];
  g.mul = [names, tbl, idx](const std::string& a, const std::string& b) {
    return (*names)[(*tbl)[idx->at(a)][idx->at(b)]];
  };
  g.inv = [names, tbl, idx, id](const std::string& a) {
    size_t i = idx->at(a);
    for (size_t j = 0; j < names->size(); ++j)
      if ((*tbl)[i][j] == id) return (*names)[j];
    throw std::domain_error("group_from_json: element without inverse");
  };
  g.gens = gens;
  return g;
}

}  // namespace coarsedim
