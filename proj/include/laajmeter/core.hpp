#pragma once

#include <string>

#include "laajmeter/errors.hpp"

namespace laajmeter {

/// Inclusive integer score range shared by models and judges.
struct ScoreScale {
    int min_score = 0;
    int max_score = 30;

    int span() const { return max_score - min_score + 1; }

    int clamp(int score) const {
        if (score < min_score) return min_score;
        if (score > max_score) return max_score;
        return score;
    }

    double clamp(double score) const {
        if (score < min_score) return static_cast<double>(min_score);
        if (score > max_score) return static_cast<double>(max_score);
        return score;
    }

    void validate() const {
        if (min_score >= max_score)
            throw ConfigError("score scale requires min_score < max_score, got [" +
                              std::to_string(min_score) + ", " + std::to_string(max_score) + "]");
    }
};

/// The benchmark stand-in: virtual points carry no content, only a count.
struct PointSet {
    int n_points = 100;

    void validate() const {
        if (n_points < 1)
            throw ConfigError("point set requires n_points >= 1, got " +
                              std::to_string(n_points));
    }
};

} // namespace laajmeter
