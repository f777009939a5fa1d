#include "leadtrack/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "leadtrack/errors.hpp"

namespace leadtrack {
namespace {

using nlohmann::json;

std::vector<NodeId> anchor_first(const LeaderSet& leaders) {
  std::vector<NodeId> out{leaders.anchor};
  for (NodeId v : leaders.leaders) {
    if (v != leaders.anchor) out.push_back(v);
  }
  return out;
}

json labels_json(std::span<const NodeId> nodes, const SymbolTable& symbols) {
  json arr = json::array();
  for (NodeId v : nodes) arr.push_back(symbols.label(v));
  return arr;
}

std::map<std::pair<int, CommunityId>, EventKind> index_events(std::span<const LifecycleEvent> events) {
  std::map<std::pair<int, CommunityId>, EventKind> out;
  for (const auto& e : events) out[{e.t, e.id}] = e.kind;
  return out;
}

template <class T>
T parse_number(const std::string& field, const std::string& source, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(source, line_no, std::string("bad ") + what + " '" + field + "'");
  }
  return value;
}

}  // namespace

void write_partitions_text(std::ostream& out, std::span<const Partition> partitions,
                           std::span<const LifecycleEvent> events, const SymbolTable& symbols) {
  const auto kinds = index_events(events);
  out << "# t community_id event leader_count member_count leaders... | members...\n";
  out << "# snapshots " << partitions.size() << '\n';
  for (const auto& p : partitions) {
    for (const auto& e : events) {
      if (e.t != p.t || e.kind != EventKind::Dissolved) continue;
      out << p.t << ' ' << e.id << " DISSOLVED 0 0 |\n";
    }
    for (const auto& c : p.communities) {
      auto it = kinds.find({p.t, c.id});
      const bool born = it != kinds.end() && it->second == EventKind::Born;
      out << p.t << ' ' << c.id << ' ' << (born ? "BORN" : "ALIVE") << ' ' << c.leaders.leaders.size() << ' '
          << c.members.size();
      for (NodeId v : anchor_first(c.leaders)) out << ' ' << symbols.label(v);
      out << " |";
      for (NodeId v : c.members) out << ' ' << symbols.label(v);
      out << '\n';
    }
  }
}

std::vector<Partition> read_partitions_text(std::istream& in, SymbolTable& symbols, const std::string& source) {
  std::map<int, Partition> by_t;
  std::size_t declared = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::istringstream ss(line);
    std::vector<std::string> fields;
    for (std::string f; ss >> f;) fields.push_back(std::move(f));
    if (fields.empty()) continue;
    if (fields[0].starts_with('#')) {
      if (fields.size() == 3 && fields[0] == "#" && fields[1] == "snapshots") {
        declared = parse_number<std::size_t>(fields[2], source, line_no, "snapshot count");
      }
      continue;
    }
    if (fields.size() < 6) throw ParseError(source, line_no, "truncated partition record");
    const int t = parse_number<int>(fields[0], source, line_no, "timestep");
    if (t < 1) throw ParseError(source, line_no, "timestep must be >= 1");
    const auto id = parse_number<CommunityId>(fields[1], source, line_no, "community id");
    const auto& event = fields[2];
    const auto leader_count = parse_number<std::size_t>(fields[3], source, line_no, "leader count");
    const auto member_count = parse_number<std::size_t>(fields[4], source, line_no, "member count");
    if (fields.size() != 6 + leader_count + member_count || fields[5 + leader_count] != "|") {
      throw ParseError(source, line_no, "node lists do not match the declared counts");
    }
    auto& p = by_t[t];
    p.t = t;
    if (event == "DISSOLVED") continue;
    if (event != "BORN" && event != "ALIVE") throw ParseError(source, line_no, "unknown event '" + event + "'");
    if (leader_count == 0 || member_count == 0) throw ParseError(source, line_no, "community without nodes");

    Community c;
    c.id = id;
    for (std::size_t i = 0; i < leader_count; ++i) c.leaders.leaders.push_back(symbols.intern(fields[5 + i]));
    c.leaders.anchor = c.leaders.leaders.front();
    c.leaders.leaders = make_node_set(std::move(c.leaders.leaders));
    for (std::size_t i = 0; i < member_count; ++i) c.members.push_back(symbols.intern(fields[6 + leader_count + i]));
    c.members = make_node_set(std::move(c.members));
    if (c.members.size() != member_count) throw ParseError(source, line_no, "duplicate member");
    p.communities.push_back(std::move(c));
  }

  const std::size_t count = std::max(declared, by_t.empty() ? std::size_t{0} : static_cast<std::size_t>(by_t.rbegin()->first));
  std::vector<Partition> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k].t = static_cast<int>(k + 1);
  for (auto& [t, p] : by_t) {
    std::sort(p.communities.begin(), p.communities.end(),
              [](const Community& a, const Community& b) { return a.id < b.id; });
    out[static_cast<std::size_t>(t - 1)] = std::move(p);
  }
  return out;
}

void write_partitions_json(std::ostream& out, std::span<const Partition> partitions,
                           std::span<const LifecycleEvent> events, const SymbolTable& symbols) {
  const auto kinds = index_events(events);
  json doc;
  doc["snapshots"] = partitions.size();
  doc["nmi_normalization"] = "arithmetic";
  json steps = json::array();
  for (const auto& p : partitions) {
    json step;
    step["t"] = p.t;
    json comms = json::array();
    for (const auto& c : p.communities) {
      auto it = kinds.find({p.t, c.id});
      comms.push_back({{"id", c.id},
                       {"event", it != kinds.end() && it->second == EventKind::Born ? "BORN" : "ALIVE"},
                       {"anchor", symbols.label(c.leaders.anchor)},
                       {"leaders", labels_json(c.leaders.leaders, symbols)},
                       {"members", labels_json(c.members, symbols)}});
    }
    step["communities"] = std::move(comms);
    json dissolved = json::array();
    for (const auto& e : events) {
      if (e.t == p.t && e.kind == EventKind::Dissolved) dissolved.push_back(e.id);
    }
    step["dissolved"] = std::move(dissolved);
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  out << doc.dump(1) << '\n';
}

void write_timelines_json(std::ostream& out, std::span<const CommunityTimeline> timelines,
                          const SymbolTable& symbols) {
  json arr = json::array();
  for (const auto& tl : timelines) {
    json entry;
    entry["id"] = tl.id;
    entry["birth_t"] = tl.birth_t;
    entry["death_t"] = tl.death_t ? json(*tl.death_t) : json(nullptr);
    json steps = json::array();
    for (const auto& s : tl.steps) {
      steps.push_back({{"t", s.t}, {"leaders", labels_json(s.leaders, symbols)}, {"members", labels_json(s.members, symbols)}});
    }
    entry["steps"] = std::move(steps);
    arr.push_back(std::move(entry));
  }
  out << arr.dump(1) << '\n';
}

}  // namespace leadtrack
