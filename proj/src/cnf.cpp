#include "paramdiam/cnf.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "paramdiam/errors.hpp"

namespace paramdiam {

void validate(const CnfFormula& f) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    if (f.clauses[c].empty()) throw ParseError("clause " + std::to_string(c + 1) + " is empty");
    for (int lit : f.clauses[c]) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.num_vars) {
        throw ParseError("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                         " out of range");
      }
    }
  }
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  std::size_t declared_clauses = 0;
  bool have_header = false;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (have_header || !(ss >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": bad 'p cnf V C' header");
      }
      f.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": clause before header");
    ss.clear();
    ss.str(line);
    std::string token;
    while (ss >> token) {
      char* end = nullptr;
      long lit = std::strtol(token.c_str(), &end, 10);
      if (*end != '\0') {
        throw ParseError("line " + std::to_string(line_no) + ": bad literal '" + token + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("last clause is not zero-terminated");
  if (f.clauses.size() != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  validate(f);
  return f;
}

CnfFormula read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

}  // namespace paramdiam
