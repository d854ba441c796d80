#include <frontcalc/germ_file.hpp>
#include <frontcalc/polynomial_parser.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace frontcalc {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

long parse_int(const Entry& e, const std::string& key, long min) {
  long v = 0;
  const char* b = e.value.data();
  const char* end = b + e.value.size();
  auto [ptr, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || ptr != end) {
    throw GermFileError(key + " must be an integer", e.line, e.column);
  }
  if (v < min) {
    throw GermFileError(key + " must be >= " + std::to_string(min), e.line,
                        e.column);
  }
  return v;
}

Jet parse_component(const Entry& e, std::size_t params, int order) {
  try {
    return parse_jet(e.value, params, order);
  } catch (const ParseError& err) {
    throw GermFileError(err.what(), e.line, e.column + err.column() - 1);
  }
}

}  // namespace

GermFile parse_germ_file(std::string_view text) {
  static const std::vector<std::string> known = {"params", "order", "phi1",
                                                 "phi2",   "n",     "p"};
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw GermFileError("expected 'key = value'", line_no, first + 1);
    }
    std::size_t key_end = eq;
    while (key_end > first && is_space(line[key_end - 1])) --key_end;
    const std::string key(line.substr(first, key_end - first));
    if (key.empty()) throw GermFileError("missing key", line_no, first + 1);
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw GermFileError("unknown key '" + key + "'", line_no, first + 1);
    }
    if (entries.count(key)) {
      throw GermFileError("duplicate key '" + key + "'", line_no, first + 1);
    }
    std::size_t vstart = eq + 1;
    while (vstart < line.size() && is_space(line[vstart])) ++vstart;
    std::size_t vend = line.size();
    while (vend > vstart && is_space(line[vend - 1])) --vend;
    if (vstart == vend) {
      throw GermFileError("missing value for '" + key + "'", line_no, eq + 2);
    }
    entries[key] = {std::string(line.substr(vstart, vend - vstart)), line_no,
                    vstart + 1};
    if (end == text.size()) break;
  }

  auto has = [&](const char* k) { return entries.count(k) > 0; };
  if (!has("params")) throw GermFileError("missing key 'params'", 0, 0);
  const bool direct = has("phi1") || has("phi2");
  const bool factored = has("n") || has("p");
  if (direct && factored) {
    const Entry& e = has("n") ? entries["n"] : entries["p"];
    throw GermFileError("phi1/phi2 and n/p cannot be mixed", e.line, e.column);
  }
  if (direct && !(has("phi1") && has("phi2"))) {
    throw GermFileError("both phi1 and phi2 are required", 0, 0);
  }
  if (factored && !(has("n") && has("p"))) {
    throw GermFileError("both n and p are required", 0, 0);
  }
  if (!direct && !factored) {
    throw GermFileError("missing components (phi1/phi2 or n/p)", 0, 0);
  }

  const auto params =
      static_cast<std::size_t>(parse_int(entries["params"], "params", 1));
  int order = Jet::kDefaultOrder;
  if (has("order")) order = static_cast<int>(parse_int(entries["order"], "order", 1));

  std::optional<PedalFactorization> factors;
  Jet phi1(params, order), phi2(params, order);
  if (direct) {
    phi1 = parse_component(entries["phi1"], params, order);
    phi2 = parse_component(entries["phi2"], params, order);
  } else {
    const Jet n = parse_component(entries["n"], params, order);
    const Jet p = parse_component(entries["p"], params, order);
    phi1 = n * p;
    phi2 = p;
    factors = PedalFactorization{n, p};
  }
  if (phi1.is_zero() && phi2.is_zero()) {
    throw GermFileError(
        "structural error: both components vanish identically", 0, 0);
  }
  return GermFile{params, order, MapGerm::unfolding(phi1, phi2), factors};
}

GermFile read_germ_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GermFileError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

std::string emit_germ_file(const MapGerm& germ) {
  if (!germ.has_unfolding_shape()) {
    throw ShapeError("only unfolding-shape germs can be written");
  }
  std::ostringstream out;
  out << "params = " << germ.num_params() << '\n'
      << "order = " << germ.order() << '\n'
      << "phi1 = " << to_string(germ.phi1()) << '\n'
      << "phi2 = " << to_string(germ.phi2()) << '\n';
  return out.str();
}

}  // namespace frontcalc
