#include "linc/io.hpp"

#include <charconv>
#include <fstream>

#include "linc/error.hpp"

namespace linc {

namespace {

uint32_t parse_u32(std::string_view text, const char* what) {
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.begin(), text.end(), value);
  if (ec != std::errc{} || ptr != text.end())
    fail(std::string("ParseError: bad ") + what + " '" + std::string(text) + "'");
  return value;
}

std::vector<uint32_t> split_u32(std::string_view text, const char* what) {
  std::vector<uint32_t> out;
  while (!text.empty()) {
    size_t comma = text.find(',');
    out.push_back(parse_u32(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
  std::string_view rest = spec;
  std::vector<uint32_t> poly;
  if (size_t colon = rest.find(':'); colon != std::string_view::npos) {
    poly = split_u32(rest.substr(colon + 1), "polynomial coefficient");
    rest = rest.substr(0, colon);
  }
  uint32_t p = 0, s = 1;
  if (size_t caret = rest.find('^'); caret != std::string_view::npos) {
    p = parse_u32(rest.substr(0, caret), "characteristic");
    s = parse_u32(rest.substr(caret + 1), "extension degree");
  } else {
    p = parse_u32(rest, "characteristic");
  }
  return poly.empty() ? make_field(p, s) : make_field(p, s, poly);
}

std::string field_spec(const Field& f) {
  std::string out = std::to_string(f.p()) + "^" + std::to_string(f.s());
  char sep = ':';
  for (uint32_t c : f.defining_poly()) {
    out += sep;
    out += std::to_string(c);
    sep = ',';
  }
  return out;
}

std::vector<uint32_t> parse_vector(const std::string& csv, const FieldPtr& f,
                                   size_t n) {
  std::vector<uint32_t> out = split_u32(csv, "vector entry");
  if (out.size() != n)
    fail("ParseError: vector has " + std::to_string(out.size()) +
         " entries, code length is " + std::to_string(n));
  for (uint32_t x : out)
    if (x >= f->q()) fail("ParseError: entry " + std::to_string(x) +
                          " is not an element of GF(" + std::to_string(f->q()) + ")");
  return out;
}

nlohmann::json field_json(const Field& f) {
  return {{"p", f.p()},
          {"s", f.s()},
          {"q", f.q()},
          {"defining_poly", f.defining_poly()},
          {"spec", field_spec(f)}};
}

nlohmann::json code_json(const LinearCode& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < c.k(); ++r)
    rows.push_back(std::vector<uint32_t>(c.gen().row(r), c.gen().row(r) + c.n()));
  return {{"field", field_json(*c.field())},
          {"n", c.n()},
          {"k", c.k()},
          {"generator", rows}};
}

nlohmann::json weights_json(const WeightDistribution& wd) {
  nlohmann::json counts = nlohmann::json::object();
  for (size_t w = 0; w <= wd.n; ++w)
    if (wd.counts[w] != 0) counts[std::to_string(w)] = wd.counts[w].get_str();
  // keys sort lexicographically, so readers must order by the numeric weight
  return {{"n", wd.n}, {"counts", counts}};
}

nlohmann::json extension_json(const ExtensionSpec& spec) {
  return {{"u", spec.u},
          {"trivial", spec.trivial},
          {"standard", spec.standard},
          {"complete", spec.complete}};
}

std::string weights_csv(const WeightDistribution& wd) {
  std::string out = "weight,count\n";
  for (size_t w = 0; w <= wd.n; ++w)
    if (wd.counts[w] != 0)
      out += std::to_string(w) + "," + wd.counts[w].get_str() + "\n";
  return out;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("IoError: cannot open " + path.string() + " for writing");
  out << contents;
  if (!out.flush()) fail("IoError: short write to " + path.string());
}

}  // namespace linc
