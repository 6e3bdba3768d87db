#include "gfp/tables.hpp"

#include <string>

#include "gfp/errors.hpp"
#include "gfp/family.hpp"
#include "gfp/parallel.hpp"

namespace gfp {

namespace {

struct Cell {
  GcdReport report;
  bool first_case = false;
  bool literal_checked = false;
  bool literal_ok = false;
};

TableRow sweep(std::string label, std::uint64_t N, std::size_t threads, SequenceCache& a, SequenceCache& b,
               Cell (*evaluate)(SequenceCache&, SequenceCache&, std::uint64_t, std::uint64_t)) {
  std::vector<Cell> cells(N * N);
  parallel_for(cells.size(), threads, [&](std::size_t i) { cells[i] = evaluate(a, b, i / N + 1, i % N + 1); });
  TableRow row;
  row.label = std::move(label);
  for (auto& c : cells) {
    ++row.comparisons;
    if (c.report.agrees)
      ++row.agreements;
    else
      row.mismatches.push_back(c.report);
    ++(c.first_case ? row.first_case : row.second_case);
    if (c.literal_checked) {
      ++row.literal_checks;
      if (c.literal_ok) ++row.literal_matches;
    }
  }
  return row;
}

Cell fib_cell(SequenceCache& fib, SequenceCache&, std::uint64_t m, std::uint64_t n) {
  return {compare(fib, fib, m, n, gcd_fib_closed(fib, m, n), CaseTag::fib_strong), true, false, false};
}

Cell lucas_cell(SequenceCache& lucas, SequenceCache&, std::uint64_t m, std::uint64_t n) {
  ClosedForm cf = gcd_lucas_closed(lucas, m, n);
  const bool first = cf.tag == CaseTag::lucas_equal_e2;
  const bool literal_ok = cf.value == Poly{1};
  return {compare(lucas, lucas, m, n, cf.value, cf.tag), first, !first, literal_ok};
}

Cell mixed_cell(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m, std::uint64_t n) {
  ClosedForm cf = gcd_mixed_closed(fib, lucas, m, n);
  const bool first = cf.tag == CaseTag::mixed_dominant;
  const bool literal_ok = cf.value == Poly{1};
  return {compare(fib, lucas, m, n, cf.value, cf.tag), first, !first, literal_ok};
}

}  // namespace

std::vector<TableRow> reproduce_table(int which, std::uint64_t max_index, std::size_t threads) {
  if (which < 3 || which > 5) throw BadTable("no table " + std::to_string(which) + " (expected 3, 4 or 5)");
  if (max_index > kMaxTableIndex)
    throw IndexTooLarge("table sweeps are capped at --max-index " + std::to_string(kMaxTableIndex));
  if (max_index == 0) throw DomainError("--max-index must be at least 1");

  std::vector<TableRow> rows;
  for (const auto& [fib_family, lucas_family] : classical_pairs()) {
    SequenceCache fib(fib_family);
    SequenceCache lucas(lucas_family);
    if (which == 3)
      rows.push_back(sweep(fib_family.name, max_index, threads, fib, fib, fib_cell));
    else if (which == 4)
      rows.push_back(sweep(lucas_family.name, max_index, threads, lucas, lucas, lucas_cell));
    else
      rows.push_back(
          sweep(fib_family.name + "/" + lucas_family.name, max_index, threads, fib, lucas, mixed_cell));
  }
  return rows;
}

}  // namespace gfp
