#pragma once

// Oriented link diagrams in PD notation and their resolutions into closed
// webs with bivalent vertices.
//
// PD conventions: X[i,j,k,l] lists arc ids counterclockwise starting from the
// incoming under-strand, so the under-strand runs i -> k.  The crossing is
// positive when the over-strand enters at l and leaves at j.  O[c] is a
// crossing-free loop made of the single arc c.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krsl2/poly.hpp"

namespace krsl2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;          // +1 or -1
  int over_in_slot = 0;  // 3 when positive, 1 when negative

  int in_slot(int k) const { return k == 0 ? 0 : over_in_slot; }
  int out_slot(int k) const { return k == 0 ? 2 : (over_in_slot + 2) % 4; }
  // Slot that continues a strand entering at in_slot s.
  static int through(int s) { return (s + 2) % 4; }
  // Out-slot joined to in-slot s by the oriented smoothing.
  int oriented_partner(int in) const;
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

struct ArcInfo {
  std::optional<SlotRef> tail;  // where the arc leaves a crossing
  std::optional<SlotRef> head;  // where the arc enters a crossing
  int component = -1;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Validates the data and runs the orientation chase.  Throws
  // std::invalid_argument on inconsistent input.
  LinkDiagram(std::vector<std::array<int, 4>> crossings, std::vector<int> loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& loops() const { return loops_; }
  const std::map<int, ArcInfo>& arcs() const { return arcs_; }
  const ArcInfo& arc(int id) const { return arcs_.at(id); }

  std::size_t crossing_count() const { return crossings_.size(); }
  int component_count() const { return component_count_; }
  // Smallest arc id of each component, indexed by component number.
  const std::vector<int>& component_labels() const { return component_labels_; }
  int writhe() const;
  // Components of the under- and over-strand at crossing c.
  int under_component(int c) const;
  int over_component(int c) const;

  std::string to_pd_text() const;

 private:
  friend LinkDiagram build_oriented(std::vector<Crossing>, std::vector<int>);

  void index_arcs();
  void label_components();

  std::vector<Crossing> crossings_;
  std::vector<int> loops_;
  std::map<int, ArcInfo> arcs_;
  int component_count_ = 0;
  std::vector<int> component_labels_;
};

// Builds a diagram whose over-strand directions are already known.
LinkDiagram build_oriented(std::vector<Crossing> crossings, std::vector<int> loops);

// Accepts X[...] and O[...] tokens separated by whitespace or commas, an
// optional PD[...] wrapper and '#' comments.
LinkDiagram parse_diagram(const std::string& text);

// Closure of a braid word; generator +i is sigma_i, -i its inverse (1-based).
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

LinkDiagram switch_crossing(const LinkDiagram& d, int c);
LinkDiagram mirror(const LinkDiagram& d);
// Replace crossing c by its oriented smoothing.
LinkDiagram smooth_crossing(const LinkDiagram& d, int c);
// Renumber arcs 1, 2, ... consecutively along components.
LinkDiagram renumbered(const LinkDiagram& d);

enum class Smoothing { Oriented, Singular };
using ResolutionWord = std::vector<Smoothing>;

struct Vertex {
  enum class Kind { Sink, Source };  // in-in / out-out
  Kind kind;
  int crossing;
};

struct Edge {
  std::vector<int> marks;    // diagram arcs in orientation order
  std::optional<int> tail;   // vertex the edge leaves
  std::optional<int> head;   // vertex the edge enters
};

struct Cycle {
  std::vector<int> edges;  // in traversal order
  int vertex_count = 0;
  int smallest_mark = 0;
};

struct Web {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  // Singular crossings as (sink vertex, source vertex) pairs, in crossing order.
  std::vector<std::pair<int, int>> singular_pairs;
  // Circle count of the all-oriented resolution of the diagram this web came from.
  std::optional<int> oriented_circle_count;
};

using MarkSet = std::map<int, std::vector<int>>;  // edge index -> marks

Web resolve(const LinkDiagram& d, const ResolutionWord& w);
// Each connected component, sorted by smallest mark.
std::vector<Cycle> cycles(const Web& g);
// Edge index -> cycle index, using the ordering of cycles().
std::vector<int> edge_cycle_map(const Web& g, const std::vector<Cycle>& cs);
MarkSet mark_set(const Web& g);
// Throws std::logic_error when the web has no resolution provenance.
int p_parity(const Web& g);
// Throws std::logic_error when a vertex or cycle violates the web invariants.
void validate_web(const Web& g);

std::vector<std::vector<Rational>> linking_matrix(const LinkDiagram& d);

}  // namespace krsl2
