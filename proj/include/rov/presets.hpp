#pragma once

#include <array>

#include "rov/errors.hpp"
#include "rov/params.hpp"
#include "rov/region.hpp"

// The five bundled figure parameter sets.  Each figure carries one class-B
// and one class-P instance sharing z0 and alpha.  Values are kept verbatim
// as decimal literals; they are loaded through the trusted constructors, so
// figure 2's class-B set (whose |beta| = 1.0774 exceeds the admissible
// bound) still produces curves, and the certification battery reports the
// inequalities it breaks instead of refusing to run.

namespace rov {

struct FigurePreset {
    int figure = 0;
    ClassBParams b;
    ClassPParams p;
};

inline const std::array<FigurePreset, 5>& figure_presets() {
    static const std::array<FigurePreset, 5> presets = {{
        {1,
         {{-230.939, 799.526}, {0.94485, 0.0416585}, 509.317, {0.427174, 0.0755107},
          {0.00882581, -0.514124}},
         {{-230.939, 799.526}, 0.254877, {0.839567, 0.0}, {0.00882581, -0.514124}}},
        {2,
         {{306.095, 212.047}, {0.67079, 0.843107}, 206.329, {-0.847689, -0.07592},
          {-0.439619, -0.843107}},
         {{306.095, 212.047}, 0.673609, {0.0802624, 0.0}, {-0.439619, -0.843107}}},
        {3,
         {{108.958, -82.5096}, {-0.0264629, -0.114565}, 132.988, {0.0327389, -0.0219389},
          {-0.971007, 0.211382}},
         {{108.958, -82.5096}, 0.390188, {0.148939, 0.0}, {-0.971007, 0.211382}}},
        {4,
         {{416.349, 436.752}, {-0.549327, 0.592394}, 97.2626, {-0.0872118, 0.664418},
          {-0.844358, -0.529996}},
         {{416.349, 436.752}, 0.620559, {0.7262, 0.0}, {-0.844358, -0.529996}}},
        {5,
         {{-100.796, 233.556}, {0.00810121, -0.00819085}, 164.079, {0.0523661, 0.167249},
          {-0.605185, 0.789592}},
         {{-100.796, 233.556}, 0.354197, {0.63945, 0.0}, {-0.605185, 0.789592}}},
    }};
    return presets;
}

inline const FigurePreset& figure_preset(int figure) {
    if (figure < 1 || figure > 5)
        throw ValidationError("UnknownPreset", "figure id must be 1..5");
    return figure_presets()[static_cast<std::size_t>(figure - 1)];
}

inline ValidatedB preset_b(int figure) {
    return ValidatedB::trusted(figure_preset(figure).b);
}

inline ValidatedP preset_p(int figure) {
    return ValidatedP::trusted(figure_preset(figure).p);
}

}  // namespace rov
