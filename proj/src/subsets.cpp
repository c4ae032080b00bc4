// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/subsets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "digram/errors.hpp"

namespace digram {

std::vector<ProgramUnit> extract_units(const std::vector<FileAnalysis>& files,
                                       const LabelConfig& config) {
  std::vector<ProgramUnit> units;
  for (const FileAnalysis& file : files) {
    std::map<std::string, std::set<InstructionId>> by_unit;
    for (const AnalyzedFragment& frag : file.fragments) {
      if (!frag.ast) continue;
      const std::string unit_id =
          unit_of_line(file.path, file.units, frag.fragment.line);
      collect_labels(*frag.ast, config, &by_unit[unit_id]);
    }
    for (auto& [unit_id, instructions] : by_unit) {
      if (instructions.empty()) continue;
      units.push_back({unit_id, std::move(instructions)});
    }
  }
  return units;
}

std::vector<ProgramUnit> extract_units_from_corpus(const CorpusSpec& spec,
                                                   const MiningConfig& config,
                                                   ParseStats* stats) {
  std::vector<FileAnalysis> analyses;
  for_each_source_file(
      spec,
      [&](SourceFile file) {
        FileAnalysis analysis = analyze_file(file, config);
        if (stats) *stats += analysis.stats;
        analyses.push_back(std::move(analysis));
      },
      stats);
  return extract_units(analyses, config.label);
}

namespace {

using MemberSet = std::set<InstructionId>;

std::size_t intersection_size(const MemberSet& a, const MemberSet& b) {
  const MemberSet& small = a.size() <= b.size() ? a : b;
  const MemberSet& large = a.size() <= b.size() ? b : a;
  std::size_t n = 0;
  for (const InstructionId& id : small) {
    if (large.count(id)) ++n;
  }
  return n;
}

}  // namespace

std::vector<InstructionSubset> cluster_subsets(
    const std::vector<ProgramUnit>& units, std::size_t max_size) {
  DIGRAM_CHECK(max_size >= 1);

  // Identical instruction sets collapse up front; lexicographic set order
  // makes the greedy walk independent of unit input order.
  std::set<MemberSet> initial;
  std::set<MemberSet> oversized;
  for (const ProgramUnit& unit : units) {
    if (unit.instructions.empty()) continue;
    if (unit.instructions.size() > max_size) {
      oversized.insert(unit.instructions);
    } else {
      initial.insert(unit.instructions);
    }
  }

  std::vector<MemberSet> clusters(initial.begin(), initial.end());
  while (clusters.size() > 1) {
    // Highest Jaccard overlap with union within the cap; overlap must be
    // nonzero -- there is nothing to exploit in merging disjoint sets.
    std::size_t best_i = 0, best_j = 0;
    std::size_t best_inter = 0, best_union = 1;
    bool found = false;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const std::size_t inter =
            intersection_size(clusters[i], clusters[j]);
        if (inter == 0) continue;
        const std::size_t uni =
            clusters[i].size() + clusters[j].size() - inter;
        if (uni > max_size) continue;
        // jaccard = inter/uni; strictly-greater keeps the first pair in
        // cluster order on ties.
        if (!found || inter * best_union > best_inter * uni) {
          best_i = i;
          best_j = j;
          best_inter = inter;
          best_union = uni;
          found = true;
        }
      }
    }
    if (!found) break;

    MemberSet merged = clusters[best_i];
    merged.insert(clusters[best_j].begin(), clusters[best_j].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_j));
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_i));
    // Keep the vector sorted and free of duplicates.
    const auto pos =
        std::lower_bound(clusters.begin(), clusters.end(), merged);
    if (pos == clusters.end() || *pos != merged) {
      clusters.insert(pos, std::move(merged));
    }
  }

  std::vector<InstructionSubset> subsets;
  for (const MemberSet& members : clusters) {
    subsets.push_back({0, max_size, members, false});
  }
  for (const MemberSet& members : oversized) {
    subsets.push_back({0, max_size, members, true});
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const InstructionSubset& a, const InstructionSubset& b) {
              return a.members < b.members;
            });
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    subsets[i].subset_id = static_cast<int>(i);
  }
  return subsets;
}

UnitSizeDistribution unit_size_distribution(
    const std::vector<ProgramUnit>& units) {
  UnitSizeDistribution dist;
  if (units.empty()) {
    dist.degenerate = true;
    return dist;
  }
  std::size_t le10 = 0, le20 = 0;
  for (const ProgramUnit& unit : units) {
    const std::size_t size = unit.instructions.size();
    ++dist.histogram[size];
    if (size <= 10) ++le10;
    if (size <= 20) ++le20;
  }
  dist.fraction_le_10 =
      static_cast<double>(le10) / static_cast<double>(units.size());
  dist.fraction_le_20 =
      static_cast<double>(le20) / static_cast<double>(units.size());
  return dist;
}

void save_subsets(const std::vector<InstructionSubset>& subsets,
                  std::size_t max_size, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write subsets file: " + path);
  out << "max_size=" << max_size << '\n';
  for (const InstructionSubset& subset : subsets) {
    if (subset.oversized) out << '!';
    bool first = true;
    for (const InstructionId& id : subset.members) {
      if (!first) out << ',';
      out << id.str();
      first = false;
    }
    out << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

std::vector<InstructionSubset> load_subsets(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read subsets file: " + path);

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty() || lines[0].rfind("max_size=", 0) != 0) {
    throw FormatError(path, 1, "expected header 'max_size=<k>'");
  }
  std::size_t max_size = 0;
  const std::string cap = lines[0].substr(9);
  const auto [ptr, ec] =
      std::from_chars(cap.data(), cap.data() + cap.size(), max_size);
  if (ec != std::errc() || ptr != cap.data() + cap.size() || max_size == 0) {
    throw FormatError(path, 1, "bad max_size '" + cap + "'");
  }

  std::vector<InstructionSubset> subsets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    std::string body = lines[i];
    bool oversized = false;
    if (body[0] == '!') {
      oversized = true;
      body.erase(0, 1);
    }
    MemberSet members;
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string name =
          body.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      if (name.empty()) {
        throw FormatError(path, line_no, "empty instruction name");
      }
      if (!members.insert(InstructionId(name)).second) {
        throw FormatError(path, line_no, "duplicate member '" + name + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!oversized && members.size() > max_size) {
      throw FormatError(path, line_no,
                        "subset exceeds declared max_size=" +
                            std::to_string(max_size));
    }
    subsets.push_back({static_cast<int>(subsets.size()), max_size,
                       std::move(members), oversized});
  }
  return subsets;
}

}  // namespace digram
