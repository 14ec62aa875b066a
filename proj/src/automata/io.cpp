#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "buchi/automata.hpp"

namespace buchi::automata {

using ojson = nlohmann::ordered_json;

namespace {

std::vector<Letter> tuple_order(const Dfa& a) {
  std::vector<Letter> order(a.alphabet_size());
  std::iota(order.begin(), order.end(), Letter{0});
  std::sort(order.begin(), order.end(), [&](Letter x, Letter y) { return a.symbol(x) < a.symbol(y); });
  return order;
}

}  // namespace

std::string to_json(const Dfa& a) {
  ojson j;
  j["base"] = a.base();
  j["tracks"] = a.tracks();
  j["stateCount"] = a.state_count();
  j["initial"] = a.initial();
  ojson acc = ojson::array();
  for (State s = 0; s < a.state_count(); ++s)
    if (a.accepting(s)) acc.push_back(s);
  j["accepting"] = acc;
  ojson trans = ojson::array();
  auto order = tuple_order(a);
  for (State s = 0; s < a.state_count(); ++s)
    for (Letter l : order) trans.push_back(ojson::array({s, a.symbol(l), a.next(s, l)}));
  j["transitions"] = trans;
  return j.dump();
}

Dfa from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
  }
  try {
    auto base = j.at("base").get<unsigned>();
    auto tracks = j.at("tracks").get<std::vector<std::string>>();
    auto n = j.at("stateCount").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("automaton needs at least one state");
    Dfa d(base, tracks, n);
    auto init = j.at("initial").get<State>();
    if (init >= n) throw std::invalid_argument("initial state out of range");
    d.set_initial(init);
    for (const auto& s : j.at("accepting")) {
      auto st = s.get<State>();
      if (st >= n) throw std::invalid_argument("accepting state out of range");
      d.set_accepting(st, true);
    }
    std::vector<std::uint8_t> seen(n * d.alphabet_size(), 0);
    for (const auto& t : j.at("transitions")) {
      auto from = t.at(0).get<State>();
      auto sym = t.at(1).get<std::vector<unsigned>>();
      auto to = t.at(2).get<State>();
      if (from >= n || to >= n) throw std::invalid_argument("transition state out of range");
      Letter l = d.letter(sym);
      if (seen[std::size_t(from) * d.alphabet_size() + l]++)
        throw std::invalid_argument("duplicate transition");
      d.set_next(from, l, to);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("transition function is not total");
    if (!is_padding_closed(d)) throw std::invalid_argument("automaton is not padding-closed");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
  }
}

std::string to_dot(const Dfa& a) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State s = 0; s < a.state_count(); ++s)
    os << "  q" << s << " [shape=" << (a.accepting(s) ? "doublecircle" : "circle") << "];\n";
  os << "  start -> q" << a.initial() << ";\n";
  auto order = tuple_order(a);
  for (State s = 0; s < a.state_count(); ++s) {
    // Group letters sharing a target into one labelled edge.
    std::vector<std::pair<State, std::string>> edges;
    for (Letter l : order) {
      State t = a.next(s, l);
      std::ostringstream label;
      auto sym = a.symbol(l);
      label << "(";
      for (std::size_t i = 0; i < sym.size(); ++i) label << (i ? "," : "") << sym[i];
      label << ")";
      auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == t; });
      if (it == edges.end()) edges.emplace_back(t, label.str());
      else it->second += " " + label.str();
    }
    for (const auto& [t, label] : edges) os << "  q" << s << " -> q" << t << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace buchi::automata
