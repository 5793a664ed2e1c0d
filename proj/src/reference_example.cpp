#include "fuzzyspline/reference_example.hpp"

namespace fuzzyspline {

Dataset reference_dataset() {
  Dataset d;
  d.label = "table51";
  d.points = {
      {{-12, 0}, {-11, 0}, {-9, 0}, {-5, 0}, {3, 0}, {6, 0}, {9, 0}},
      {{15, 28}, {15, 26}, {15, 25}, {15, 20}, {15, 16}, {15, 14}, {15, 12}},
      {{17, -13}, {15, -15}, {13, -17}, {10, -20}, {8, -22}, {5, -25}, {3, -27}},
      {{30, 10}, {32, 10}, {34, 10}, {40, 10}, {46, 10}, {48, 10}, {49, 10}},
  };
  return d;
}

std::vector<Erratum> reference_errata() {
  return {
      {1, "right", {15, 7}, {15, 17},
       "mean of (15, 18), (15, 17), (15, 16); the printed defuzzified y 20.0556 needs 17"},
      {3, "right", {48.8333, 10}, {131.5 / 3.0, 10},
       "mean of (43, 10), (44, 10), (44.5, 10); the printed defuzzified x 39.9444 needs 43.8333"},
  };
}

}  // namespace fuzzyspline
