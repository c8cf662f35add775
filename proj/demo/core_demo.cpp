// SPDX-License-Identifier: Apache-2.0

// Builds an interrupted repetition, prints its core, and shows how the
// anchor windows and the periodic segments locate the interrupt.

#include <iostream>

#include "scratch/interrupt.hpp"
#include "scratch/locator.hpp"

int main() {
  using namespace scratch;

  // x = aabab with x2 = ab deleted after x1 = aab: W = x . aab . x . x
  const InterruptSpec spec{DeletionSplit::prefix("aabab"_w, 3), 1, 2};
  const auto report = core(spec);

  std::cout << "W        = " << report.word << "\n"
            << "junction = " << report.junction << "\n"
            << "core     = " << report.core << " at [" << report.core_start << "," << report.core_end << ")\n";

  for (const auto& anchor : anchor_windows(report)) {
    const auto lookup = locate_anchor(report.word, anchor.factor);
    std::cout << "anchor " << anchor.factor << " at " << anchor.position << ": "
              << (lookup.unique() ? "unique" : "repeated") << "\n";
  }

  const auto segments = periodic_segments(report.word, spec.x());
  for (const auto& s : segments.segments) {
    std::cout << "segment [" << s.start << "," << s.end << ") phase " << s.phase << "\n";
  }
  for (const auto& j : segments.jumps) std::cout << "jump deleted_mod " << j.deleted_mod << "\n";
}
