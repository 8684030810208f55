#include "dyndeg/map_io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dyndeg {

void write_text(std::ostream& os, const PlaneRationalMap& m) {
  os << "degree " << m.degree() << '\n';
  for (int i = 0; i < 3; ++i) {
    if (i > 0) os << "--\n";
    for (const Term& t : m.f[i].terms()) {
      os << t.c.get_str() << ' ' << t.e[0] << ' ' << t.e[1] << ' ' << t.e[2] << '\n';
    }
  }
}

std::string to_text(const PlaneRationalMap& m) {
  std::ostringstream os;
  write_text(os, m);
  return os.str();
}

PlaneRationalMap map_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("map text: empty input");
  std::istringstream head(line);
  std::string word;
  long degree = -1;
  if (!(head >> word >> degree) || word != "degree" || degree < 0 || !(head >> std::ws).eof()) {
    throw std::invalid_argument("map text: bad header '" + line + "'");
  }
  std::array<std::vector<Term>, 3> terms;
  int comp = 0;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line == "--") {
      if (++comp > 2) throw std::invalid_argument("map text: more than three components");
      continue;
    }
    std::istringstream ls(line);
    std::string coeff;
    long e0, e1, e2;
    if (!(ls >> coeff >> e0 >> e1 >> e2) || !(ls >> std::ws).eof() || e0 < 0 || e1 < 0 || e2 < 0) {
      throw std::invalid_argument("map text: bad term on line " + std::to_string(lineno));
    }
    Int c;
    if (c.set_str(coeff, 10) != 0) {
      throw std::invalid_argument("map text: bad coefficient on line " + std::to_string(lineno));
    }
    terms[comp].push_back({{static_cast<std::uint32_t>(e0), static_cast<std::uint32_t>(e1),
                            static_cast<std::uint32_t>(e2)},
                           std::move(c)});
  }
  if (comp != 2) throw std::invalid_argument("map text: expected three components");
  PlaneRationalMap m;
  for (int i = 0; i < 3; ++i) {
    m.f[i] = HomoPoly::from_terms(static_cast<unsigned>(degree), std::move(terms[i]));
  }
  return m;
}

}  // namespace dyndeg
