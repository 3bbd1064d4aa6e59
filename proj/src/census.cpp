#include "bandposet/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "bandposet/enumerate.hpp"
#include "bandposet/errors.hpp"
#include "bandposet/search.hpp"

namespace bandposet {

std::string CensusRecord::to_line() const {
  std::ostringstream out;
  out << "n=" << n << " poset=" << poset << " rrb=" << rrb << " rnb=" << rnb
      << " comm=" << comm << " tree=" << tree << " meet=" << meet_semilattice
      << " rmeet=" << relative_meet_semilattice << " witness=";
  if (!witness) {
    out << "none";
  } else {
    const auto& t = witness->table();
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  }
  return out.str();
}

CensusRecord CensusRecord::from_line(const std::string& line) {
  std::istringstream in(line);
  std::string field;
  CensusRecord r;
  const char* keys[] = {"n", "poset", "rrb", "rnb", "comm",
                        "tree", "meet", "rmeet", "witness"};
  for (const char* key : keys) {
    if (!(in >> field)) throw InputError("census line is missing " + std::string(key));
    const auto eq = field.find('=');
    if (eq == std::string::npos || field.substr(0, eq) != key) {
      throw InputError("census line: expected " + std::string(key) + "=...");
    }
    const std::string value = field.substr(eq + 1);
    try {
      const std::string k = key;
      if (k == "n") {
        r.n = static_cast<unsigned>(std::stoul(value));
      } else if (k == "poset") {
        r.poset = value;
      } else if (k == "rrb") {
        r.rrb = std::stoull(value);
      } else if (k == "rnb") {
        r.rnb = std::stoull(value);
      } else if (k == "comm") {
        r.comm = std::stoull(value);
      } else if (k == "tree") {
        r.tree = value == "1";
      } else if (k == "meet") {
        r.meet_semilattice = value == "1";
      } else if (k == "rmeet") {
        r.relative_meet_semilattice = value == "1";
      } else if (value != "none") {
        std::vector<Element> table;
        std::istringstream cells(value);
        std::string cell;
        while (std::getline(cells, cell, ',')) table.push_back(std::stoul(cell));
        r.witness = BandOp(r.n, std::move(table));
      }
    } catch (const std::logic_error&) {
      throw InputError("census line: bad value in " + field);
    }
  }
  return r;
}

CensusRecord census_record(const Poset& canonical) {
  CensusRecord r;
  r.n = canonical.size();
  r.poset = canonical.relation_bits();
  auto count = [&](Variety v) {
    return find_admissible(canonical, {v, SearchMode::kCount}).count;
  };
  r.rrb = count(Variety::kRrb);
  r.rnb = count(Variety::kRnb);
  r.comm = count(Variety::kCommutative);
  r.tree = is_tree(canonical);
  r.meet_semilattice = is_meet_semilattice(canonical);
  r.relative_meet_semilattice = is_relative_meet_semilattice(canonical);
  auto first = find_admissible(canonical, {Variety::kRrb, SearchMode::kFirst});
  if (!first.ops.empty()) r.witness = first.ops.front();
  if (!(r.comm <= r.rnb && r.rnb <= r.rrb)) {
    throw InvariantError("variety counts are not nested for " + r.poset);
  }
  return r;
}

std::vector<CensusRecord> run_census(unsigned max_n, unsigned threads) {
  if (max_n > kMaxCensusSize) {
    throw InputError("census is limited to " + std::to_string(kMaxCensusSize) +
                     " elements");
  }
  std::vector<Poset> posets;
  for (unsigned n = 1; n <= max_n; ++n) {
    auto level = collect_posets(n, false);
    posets.insert(posets.end(), level.begin(), level.end());
  }
  std::vector<CensusRecord> records(posets.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(posets.size());
  auto work = [&] {
    for (std::size_t i = next++; i < posets.size(); i = next++) {
      try {
        records[i] = census_record(posets[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

void write_census(const std::vector<CensusRecord>& records, std::ostream& out) {
  for (const auto& r : records) out << r.to_line() << "\n";
}

}  // namespace bandposet
