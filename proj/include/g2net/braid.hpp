#pragma once

#include <map>
#include <vector>

#include "g2net/diagram.hpp"
#include "g2net/errors.hpp"

namespace g2net {

/// Braid word on `strands` strands; letter i > 0 is the positive generator
/// crossing strands i and i+1 (1-based), i < 0 its inverse.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;
};

/// Trace closure of a braid word as a diagram. Strands untouched by any
/// letter close up into free loops. The positive generator is the crossing
/// whose closure on two strands is the curl `X 1 2 2 1`.
inline Diagram braidClosure(const BraidWord& w) {
  if (w.strands < 1) throw ParseError("braid needs at least one strand");
  struct Line {
    std::array<long, 4> labels;
  };
  std::vector<Line> lines;
  std::vector<long> pending(w.strands);
  std::vector<long> bottom(w.strands);
  long nextLabel = 1;
  for (int j = 0; j < w.strands; ++j) pending[j] = bottom[j] = nextLabel++;
  std::vector<bool> touched(w.strands, false);
  for (int letter : w.letters) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= w.strands)
      throw ParseError("braid letter out of range");
    touched[i - 1] = touched[i] = true;
    long bl = pending[i - 1], br = pending[i];
    long tl = nextLabel++, tr = nextLabel++;
    // Crossing legs ccw are (TR, TL, BL, BR); the over strand occupies
    // slots 0 and 2. Positive letters put BL-TR on top.
    if (letter > 0)
      lines.push_back({{tr, tl, bl, br}});
    else
      lines.push_back({{tl, bl, br, tr}});
    pending[i - 1] = tl;
    pending[i] = tr;
  }
  // Close the trace: identify the final top label with the bottom label.
  std::map<long, long> rename;
  for (int j = 0; j < w.strands; ++j)
    if (touched[j]) rename[pending[j]] = bottom[j];
  DiagramBuilder b;
  for (const Line& line : lines) {
    std::array<long, 4> l = line.labels;
    for (long& x : l) {
      auto it = rename.find(x);
      if (it != rename.end()) x = it->second;
    }
    b.addCrossing(l[0], l[1], l[2], l[3]);
  }
  for (int j = 0; j < w.strands; ++j)
    if (!touched[j]) b.addFreeLoops(1);
  return b.build();
}

}  // namespace g2net
