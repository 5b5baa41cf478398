#pragma once

#include <iosfwd>
#include <string>

#include "interlace/delta.hpp"
#include "interlace/eulerian.hpp"
#include "interlace/graph.hpp"
#include "interlace/plane.hpp"

namespace interlace {

// Text formats. All are UTF-8, whitespace separated, with '#' starting a
// comment that runs to the end of the line.
//
//   graph <n>      then lines  e <u> <v>       (0-based; e v v is a loop)
//   digraph4 <n>   then lines  a <u> <v>       (arc u -> v; validated 2-in 2-out)
//   graph4 <n>     then lines  e <u> <v>       (repetition = multi-edge; validated 4-regular)
//   plane <n>      then lines  e <id> <u> <v>  and  rot <v> <id:end>...
//                  (edge ids 0..m-1 in order; rot lists edge ends
//                   counterclockwise, end 0 = the u side)
//   setsystem <n>  then lines  f <elements...> (bare f is the empty set)
//
// Parse errors name the offending line number.

enum class InputKind { Graph, Digraph4, Graph4, Plane, SetSystem };

InputKind sniff_kind(const std::string& text);

Graph parse_graph(const std::string& text);
TwoInTwoOutDigraph parse_digraph4(const std::string& text);
FourRegularGraph parse_graph4(const std::string& text);
PlaneGraph parse_plane(const std::string& text);
SetSystem parse_setsystem(const std::string& text);

std::string write_graph(const Graph& g);
std::string write_setsystem(const SetSystem& s);

std::string read_file(const std::string& path);  // Error on failure

}  // namespace interlace
