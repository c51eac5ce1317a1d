#include "resurgence/ideal_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace resurgence {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

}  // namespace

MonomialIdeal read_ideal(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("ideal input: missing variable line");
  VariableSet vars(tokens(line));
  std::vector<Monomial> gens;
  bool unit = false;
  while (std::getline(in, line)) {
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() == 1 && toks[0] == "1") { unit = true; continue; }
    std::vector<int> exps(vars.count(), 0);
    for (const std::string& t : toks) {
      auto caret = t.find('^');
      std::string name = t.substr(0, caret);
      int exp = 1;
      if (caret != std::string::npos) {
        try {
          exp = std::stoi(t.substr(caret + 1));
        } catch (const std::exception&) {
          throw std::invalid_argument("ideal input: bad exponent in token " + t);
        }
        if (exp < 0) throw std::invalid_argument("ideal input: negative exponent in " + t);
      }
      int idx = vars.index_of(name);
      if (idx < 0) throw std::invalid_argument("ideal input: unknown variable " + name);
      exps[idx] += exp;
    }
    gens.push_back(Monomial(std::move(exps)));
  }
  if (unit) return MonomialIdeal::unit(std::move(vars));
  return MonomialIdeal::make(std::move(vars), std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ideal file: " + path);
  return read_ideal(in);
}

void write_ideal(std::ostream& out, const MonomialIdeal& I) {
  const auto& names = I.ambient().names();
  for (size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
  out << "\n";
  if (I.is_unit()) {
    out << "1\n";
    return;
  }
  for (const Monomial& g : I.generators()) out << g.str(I.ambient()) << "\n";
}

std::string ideal_to_string(const MonomialIdeal& I) {
  std::ostringstream ss;
  write_ideal(ss, I);
  return ss.str();
}

}  // namespace resurgence
