#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fullerene/cycle.hpp"
#include "fullerene/graph.hpp"

namespace fullerene {

/// Faces by number of white boundary vertices: 0, 1, 2, or more. The last
/// class cannot occur for a cycle without a white path on three vertices.
enum class FaceClass { black, single, white, overfull };

const char* to_string(FaceClass c);

struct FaceColoring {
  std::vector<char> white;       // per vertex: not on the cycle
  std::vector<int> face_whites;  // per face: white boundary vertices
  std::vector<FaceClass> face_class;
  int white_count = 0;

  bool is_white(Vertex v) const { return white[v] != 0; }
};

FaceColoring color(const FullereneGraph& g, const CycleState& c);

/// Outcome of a structural check. On failure `witness` holds the offending
/// vertices and `face` the offending face where one is involved.
struct LemmaCheck {
  bool ok = true;
  std::vector<Vertex> witness;
  std::optional<FaceId> face;

  std::string describe() const;
};

/// Fails with the first path a-b-c of white vertices (b ascending).
LemmaCheck check_no_white_p3(const FullereneGraph& g, const FaceColoring& coloring);
/// Fails on the first pentagon with two or more white vertices.
LemmaCheck check_no_white_pentagon(const FullereneGraph& g, const FaceColoring& coloring);
/// Fails on the first face with three or more white vertices.
LemmaCheck check_max_two_whites_per_face(const FullereneGraph& g, const FaceColoring& coloring);

/// One position of a face word: whether boundary vertex i is white and
/// whether boundary edge i (from vertex i to i+1) lies on the cycle.
/// Symbol = 2 * white + on_cycle.
using PatternWord = std::vector<int>;

/// Least word over all rotations and reflections.
PatternWord canonical_word(const PatternWord& word);

struct PatternClass {
  int size = 0;
  PatternWord word;  // canonical
  int whites = 0;
  /// A pentagon with two white vertices is locally feasible but cannot
  /// occur for a longest cycle.
  bool white_pentagon = false;

  bool operator==(const PatternClass&) const = default;
};

/// Brute-force enumeration of the traversal classes of 5- and 6-faces that
/// satisfy the local constraints: a white vertex has no boundary cycle edge;
/// a cycle edge has black ends; a black vertex has one or two boundary cycle
/// edges (its third edge is the only one leaving the face); no three
/// consecutive white vertices. With `include_closed` the words where the
/// cycle is the face boundary itself are kept as well. Sorted by (size, word).
std::vector<PatternClass> enumerate_patterns(bool include_closed = false);

/// The catalogue: enumerate_patterns() computed once.
const std::vector<PatternClass>& pattern_catalogue();

struct TraversalPattern {
  FaceId face = -1;
  PatternWord word;       // in boundary order
  PatternWord canonical;  // least rotation/reflection
  int canonical_id = -1;  // index into pattern_catalogue(), -1 if outside
  /// False when outside the catalogue or a white pentagon.
  bool lemma_consistent = false;
};

TraversalPattern classify_pattern(const FullereneGraph& g, FaceId face,
                                  const FaceColoring& coloring, const CycleState& c);

}  // namespace fullerene
