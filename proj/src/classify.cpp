#include "fullerene/classify.hpp"

#include <algorithm>

namespace fullerene {

const char* to_string(FaceClass c) {
  switch (c) {
    case FaceClass::black:
      return "black";
    case FaceClass::single:
      return "single";
    case FaceClass::white:
      return "white";
    case FaceClass::overfull:
      return "overfull";
  }
  return "?";
}

FaceColoring color(const FullereneGraph& g, const CycleState& c) {
  FaceColoring out;
  out.white.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    out.white[v] = !c.contains_vertex(v);
    out.white_count += out.white[v];
  }
  out.face_whites.assign(g.num_faces(), 0);
  out.face_class.assign(g.num_faces(), FaceClass::black);
  for (const Face& face : g.faces()) {
    int w = 0;
    for (Vertex v : face.boundary) w += out.white[v];
    out.face_whites[face.id] = w;
    out.face_class[face.id] = w == 0   ? FaceClass::black
                              : w == 1 ? FaceClass::single
                              : w == 2 ? FaceClass::white
                                       : FaceClass::overfull;
  }
  return out;
}

std::string LemmaCheck::describe() const {
  if (ok) return "pass";
  std::string out = "violation";
  if (face) out += " on face " + std::to_string(*face);
  out += ", vertices";
  for (Vertex v : witness) out += " " + std::to_string(v);
  return out;
}

LemmaCheck check_no_white_p3(const FullereneGraph& g, const FaceColoring& coloring) {
  for (Vertex mid = 0; mid < g.n(); ++mid) {
    if (!coloring.is_white(mid)) continue;
    std::vector<Vertex> ends;
    for (Vertex u : g.neighbors(mid)) {
      if (coloring.is_white(u)) ends.push_back(u);
    }
    if (ends.size() >= 2) {
      std::sort(ends.begin(), ends.end());
      return LemmaCheck{false, {ends[0], mid, ends[1]}, std::nullopt};
    }
  }
  return {};
}

namespace {

std::vector<Vertex> whites_on(const Face& face, const FaceColoring& coloring) {
  std::vector<Vertex> out;
  for (Vertex v : face.boundary) {
    if (coloring.is_white(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

LemmaCheck check_no_white_pentagon(const FullereneGraph& g, const FaceColoring& coloring) {
  for (const Face& face : g.faces()) {
    if (face.size() == 5 && coloring.face_whites[face.id] >= 2) {
      return LemmaCheck{false, whites_on(face, coloring), face.id};
    }
  }
  return {};
}

LemmaCheck check_max_two_whites_per_face(const FullereneGraph& g, const FaceColoring& coloring) {
  for (const Face& face : g.faces()) {
    if (coloring.face_whites[face.id] > 2) {
      return LemmaCheck{false, whites_on(face, coloring), face.id};
    }
  }
  return {};
}

PatternWord canonical_word(const PatternWord& word) {
  const int k = static_cast<int>(word.size());
  auto white = [&](int i) { return word[((i % k) + k) % k] / 2; };
  auto on = [&](int i) { return word[((i % k) + k) % k] % 2; };
  PatternWord best = word;
  PatternWord candidate(k);
  for (int shift = 0; shift < k; ++shift) {
    for (int i = 0; i < k; ++i) candidate[i] = word[(i + shift) % k];
    best = std::min(best, candidate);
    // Reflection: vertex j maps to shift - j; the edge after it is the one
    // before the original vertex.
    for (int j = 0; j < k; ++j) candidate[j] = 2 * white(shift - j) + on(shift - j - 1);
    best = std::min(best, candidate);
  }
  return best;
}

std::vector<PatternClass> enumerate_patterns(bool include_closed) {
  std::vector<PatternClass> out;
  for (int k : {5, 6}) {
    std::vector<PatternWord> seen;
    for (int edges = 0; edges < (1 << k); ++edges) {
      for (int colors = 0; colors < (1 << k); ++colors) {
        auto on = [&](int i) { return (edges >> (((i % k) + k) % k)) & 1; };
        auto white = [&](int i) { return (colors >> (((i % k) + k) % k)) & 1; };
        bool feasible = true;
        for (int i = 0; i < k && feasible; ++i) {
          const int incident = on(i - 1) + on(i);
          if (white(i) && incident != 0) feasible = false;
          if (!white(i) && (incident < 1 || incident > 2)) feasible = false;
          if (white(i) && white(i + 1) && white(i + 2)) feasible = false;
        }
        if (!feasible) continue;
        if (!include_closed && edges == (1 << k) - 1) continue;
        PatternWord word(k);
        for (int i = 0; i < k; ++i) word[i] = 2 * white(i) + on(i);
        PatternWord canon = canonical_word(word);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);
      }
    }
    std::sort(seen.begin(), seen.end());
    for (auto& word : seen) {
      PatternClass cls;
      cls.size = k;
      cls.whites = static_cast<int>(std::count_if(word.begin(), word.end(), [](int s) { return s >= 2; }));
      cls.white_pentagon = k == 5 && cls.whites >= 2;
      cls.word = std::move(word);
      out.push_back(std::move(cls));
    }
  }
  return out;
}

const std::vector<PatternClass>& pattern_catalogue() {
  static const std::vector<PatternClass> catalogue = enumerate_patterns();
  return catalogue;
}

TraversalPattern classify_pattern(const FullereneGraph& g, FaceId face_id,
                                  const FaceColoring& coloring, const CycleState& c) {
  const Face& face = g.face(face_id);
  TraversalPattern out;
  out.face = face_id;
  out.word.resize(face.size());
  for (int i = 0; i < face.size(); ++i) {
    out.word[i] = 2 * coloring.is_white(face.vertex(i)) + c.contains_edge(face.edge(i));
  }
  out.canonical = canonical_word(out.word);
  const auto& catalogue = pattern_catalogue();
  for (int id = 0; id < static_cast<int>(catalogue.size()); ++id) {
    if (catalogue[id].size == face.size() && catalogue[id].word == out.canonical) {
      out.canonical_id = id;
      out.lemma_consistent = !catalogue[id].white_pentagon;
      break;
    }
  }
  return out;
}

}  // namespace fullerene
