#include "radio/labeling.hpp"

#include <string>

namespace radio {

Labeling::Labeling(std::vector<std::int64_t> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::domain_error("labeling must cover at least one vertex");
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] < 1) {
      throw std::domain_error("label of vertex " + std::to_string(v) +
                              " is " + std::to_string(labels_[v]) +
                              "; labels are positive integers");
    }
  }
}

std::int64_t Labeling::span() const {
  return *std::max_element(labels_.begin(), labels_.end());
}

}  // namespace radio
