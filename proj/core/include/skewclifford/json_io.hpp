#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "skewclifford/element.hpp"
#include "skewclifford/errors.hpp"
#include "skewclifford/graded.hpp"
#include "skewclifford/matrix.hpp"
#include "skewclifford/presentation.hpp"
#include "skewclifford/structure.hpp"

namespace skcl {

// Keys keep insertion order so identical inputs produce byte-identical
// output.
using Json = nlohmann::ordered_json;

// Rationals travel as strings "p" / "p/q"; plain JSON integers are accepted
// on input for convenience.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

struct PresentationFile {
    Mat mu;
    Mat b;
    std::optional<std::string> name;
};

/// Parses {"n": ..., "mu": [[...]], "b": [[...]], "name"?: ...}; shape
/// mismatches and malformed rationals raise ValidationError.
PresentationFile presentation_file_from_json(const Json& j);
Json presentation_file_to_json(const Mat& mu, const Mat& b,
                               const std::optional<std::string>& name = std::nullopt);

/// Elements serialize as arrays of {"word": [1-based indices], "coeff": "p/q"}.
Json element_to_json(const Element& e);
Element element_from_json(const Json& j, int letters);

Json word_to_json(const Word& w);

Json star_report_to_json(const StarReport& r);
Json consequences_to_json(const std::vector<LinearConsequence>& cs);
Json tfae_to_json(const TfaeReport& r);
Json reduction_to_json(const ReductionResult& r);
Json graded_to_json(const GradedPresentation& g);
Json partition_to_json(const PartitionResult& r);
Json violations_to_json(const std::vector<Violation>& vs);

}  // namespace skcl
