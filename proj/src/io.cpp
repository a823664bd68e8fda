#include "trimlat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trimlat {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw LatticeError(Errc::MalformedFile, what);
}

}  // namespace

Lattice lattice_from_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  if (!doc.contains("size") || !doc["size"].is_number_unsigned()) {
    malformed("\"size\" must be a non-negative integer");
  }
  const auto size = doc["size"].get<std::uint64_t>();
  if (size == 0 || size > 1'000'000) malformed("\"size\" out of range");
  if (!doc.contains("covers") || !doc["covers"].is_array()) {
    malformed("\"covers\" must be an array");
  }
  std::vector<Cover> covers;
  const auto& arr = doc["covers"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& e = arr[k];
    bool ok = e.is_array() && e.size() == 2 && e[0].is_number_unsigned() &&
              e[1].is_number_unsigned() && e[0].get<std::uint64_t>() < size &&
              e[1].get<std::uint64_t>() < size;
    if (!ok) malformed("covers[" + std::to_string(k) + "] is not a pair of element indices");
    covers.push_back({e[0].get<Elem>(), e[1].get<Elem>()});
  }
  std::vector<std::string> names;
  if (doc.contains("names") && !doc["names"].is_null()) {
    const auto& ns = doc["names"];
    if (!ns.is_array() || ns.size() != size) malformed("\"names\" must list one name per element");
    for (std::size_t k = 0; k < ns.size(); ++k) {
      if (!ns[k].is_string()) malformed("names[" + std::to_string(k) + "] is not a string");
      names.push_back(ns[k].get<std::string>());
    }
  }
  return Lattice::from_covers(size, std::move(covers), std::move(names));
}

std::string lattice_to_json(const Lattice& lat) {
  ojson doc;
  doc["size"] = lat.size();
  ojson covers = ojson::array();
  for (const auto& c : lat.covers()) covers.push_back({c.lower, c.upper});
  doc["covers"] = std::move(covers);
  if (!lat.names().empty()) doc["names"] = lat.names();
  return doc.dump() + "\n";
}

Lattice read_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return lattice_from_json(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LatticeError(Errc::InvalidInput, "cannot write " + path.string());
  out << text;
}

std::string lattice_to_dot(const Lattice& lat, std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != lat.num_edges()) {
    throw LatticeError(Errc::InvalidInput, "one label per edge expected");
  }
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Elem v = 0; v < lat.size(); ++v) {
    os << "  " << v << " [label=" << quote(lat.name(v)) << "];\n";
  }
  auto covers = lat.covers();
  for (std::size_t e = 0; e < covers.size(); ++e) {
    os << "  " << covers[e].lower << " -> " << covers[e].upper;
    if (!labels.empty()) os << " [label=" << quote(labels[e]) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace trimlat
