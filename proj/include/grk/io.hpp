#pragma once

#include "grk/gri.hpp"
#include "grk/pmodule.hpp"
#include "grk/zigzag.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace grk {

// Text formats. '#' starts a comment; tokens are whitespace separated.
//   poset:   "poset n" followed by "cover a b" lines, or "grid w h ox oy"
//   matrix:  "rows cols" followed by row-major entries
//   module:  a poset block, optional "field p", "dims e d" lines, "map a b" + matrix lines
//   path:    "path n" followed by n "x y" lines
FinitePoset parse_poset(const std::string& text);
PModule parse_module(const std::string& text, std::uint32_t default_p = kDefaultPrime);
PModule read_module_file(const std::string& path, std::uint32_t default_p = kDefaultPrime);
std::string write_module(const PModule& m);

std::vector<Point> parse_path(const std::string& text);
std::vector<Point> read_path_file(const std::string& path);
std::string write_path(const std::vector<Point>& pts);

// One subposet per line, element ids separated by commas or spaces.
std::vector<Subposet> parse_collection(const std::string& text, const FinitePoset& P);
std::string read_text_file(const std::string& path);

std::string members_string(const std::vector<int>& members);

std::string gri_tsv(const GriTable& t);
GriTable parse_gri_tsv(const std::string& text, PosetPtr P);
nlohmann::json gri_json(const GriTable& t);

std::string diagram_tsv(const SignedDiagram& d);
nlohmann::json diagram_json(const SignedDiagram& d);
// Hasse diagram of the collection under reverse inclusion, nodes labelled with diagram values.
std::string diagram_dot(const SignedDiagram& d, const std::vector<Subposet>& collection);

std::string barcode_tsv(const Barcode& b);
nlohmann::json barcode_json(const Barcode& b);
nlohmann::json path_json(const ZigzagPath& p);
nlohmann::json points_json(const PointSet& s);

}  // namespace grk
