#pragma once

#include "citnet/network.hpp"
#include "citnet/numeric.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace citnet {

// Reads the directed subset of the Pajek .net format:
//
//   % comment
//   *Network name          (optional, ignored)
//   *Vertices n
//   id "label" [...]       (optional; missing vertices are labelled by id)
//   *Arcs
//   tail head [weight] [...]
//
// Ids are 1-based. *Edges, *Arcslist, *Edgeslist and *Matrix sections are
// rejected. Loops and parallel arcs are kept as given. Throws ParseError.
Network parse_pajek(std::istream& in);
Network parse_pajek(const std::string& text);
Network read_pajek_file(const std::filesystem::path& path);

// Writes net as *Vertices / *Arcs. Arc weights come from `weights` when
// given (aligned with the arcs), otherwise from the network itself.
void write_pajek(std::ostream& out, const Network& net, const WeightVector* weights = nullptr);
std::string write_pajek(const Network& net, const WeightVector* weights = nullptr);

// Pajek vector: "*Vertices n" then one value per line.
void write_vec(std::ostream& out, const WeightVector& values);
void write_vec(std::ostream& out, std::span<const double> values);

// Pajek partition: "*Vertices n" then one class per line. Classes are
// written as given (callers pass 1-based classes).
void write_clu(std::ostream& out, std::span<const std::size_t> classes);

}  // namespace citnet
