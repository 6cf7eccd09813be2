#include "f2lab/set_io.hpp"

#include <fstream>
#include <sstream>

#include "f2lab/config.hpp"

namespace f2lab {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

GF2Set read_set(std::istream& in) {
  std::string line;
  int dim = -1;
  GF2Set set;
  while (std::getline(in, line)) {
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (dim < 0) {
      std::istringstream hdr(s);
      std::string kw;
      long long m = -1;
      hdr >> kw >> m;
      std::string rest;
      hdr >> rest;
      if (kw != "dim" || m < 1 || !rest.empty())
        fail(Err::Parse, "expected 'dim m' header, got '" + s + "'");
      if (m > limits().max_dim)
        fail(Err::ResourceLimit, "dim " + std::to_string(m) + " exceeds guard " +
                                     std::to_string(limits().max_dim));
      dim = static_cast<int>(m);
      set = GF2Set(dim);
      continue;
    }
    const uint32_t p = parse_bitstring(dim, s);
    if (set.contains(p)) fail(Err::Parse, "duplicate vector line '" + s + "'");
    set.insert(p);
  }
  if (dim < 0) fail(Err::Parse, "missing 'dim m' header");
  return set;
}

GF2Set read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Parse, "cannot open '" + path + "'");
  return read_set(in);
}

void write_set(std::ostream& out, const GF2Set& a) {
  out << "dim " << a.dim() << "\n";
  a.for_each([&](uint32_t p) { out << bitstring(a.dim(), p) << "\n"; });
}

void write_set_file(const std::string& path, const GF2Set& a) {
  std::ofstream out(path);
  if (!out) fail(Err::Parse, "cannot open '" + path + "' for writing");
  write_set(out, a);
}

}  // namespace f2lab
