#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "leadtrack/graph.hpp"
#include "leadtrack/partition.hpp"

namespace leadtrack {

/// Line-delimited partition records, one per community per step:
///
///   t community_id event leader_count member_count leaders... | members...
///
/// `event` is BORN, ALIVE or DISSOLVED (dissolved records carry no nodes).
/// The anchor is listed first among the leaders; the rest are sorted.
/// A `# snapshots <Δ>` header keeps trailing empty snapshots.
void write_partitions_text(std::ostream& out, std::span<const Partition> partitions,
                           std::span<const LifecycleEvent> events, const SymbolTable& symbols);

/// Inverse of write_partitions_text. Node labels are interned into
/// `symbols`. ParseError on malformed records.
std::vector<Partition> read_partitions_text(std::istream& in, SymbolTable& symbols,
                                            const std::string& source = "<partitions>");

/// Same content as the text format, as a JSON document.
void write_partitions_json(std::ostream& out, std::span<const Partition> partitions,
                           std::span<const LifecycleEvent> events, const SymbolTable& symbols);

void write_timelines_json(std::ostream& out, std::span<const CommunityTimeline> timelines,
                          const SymbolTable& symbols);

}  // namespace leadtrack
