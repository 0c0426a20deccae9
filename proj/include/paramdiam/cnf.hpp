#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace paramdiam {

// Clauses of signed, 1-based literals.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Throws ParseError on empty clauses or literals beyond num_vars.
void validate(const CnfFormula& f);

// DIMACS CNF: 'c' comment lines, a "p cnf V C" header, then C clauses of
// zero-terminated literals that may span lines. Throws ParseError.
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const CnfFormula& f);

}  // namespace paramdiam
