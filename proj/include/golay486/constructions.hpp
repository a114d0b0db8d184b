#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "golay486/codes.hpp"
#include "golay486/gf3.hpp"
#include "golay486/graph.hpp"
#include "golay486/isomorphism.hpp"
#include "golay486/permaction.hpp"

// The 486-vertex graphs built from the ternary Golay code and from the rank-9 action.
namespace golay486::constructions {

using graph::Graph;
using graph::Vertex;

/// Verbatim transcription of the three generators a, b, c of the degree-486 action.
std::string_view bundled_generators();
inline constexpr std::size_t kActionDegree = 486;

enum class SubspaceType : std::uint8_t { TypeI, TypeII };

const char* to_string(SubspaceType type);

/// Reference weight distributions of the two classes of intermediate 10-spaces.
const codes::WeightDistribution& type_one_distribution();
const codes::WeightDistribution& type_two_distribution();

/// A coset of one of the 81 intermediate subspaces: { x : functional(x) = translate }.
struct Flat {
    std::size_t subspace = 0;
    gf3::Element translate = 0;
};

struct FlatFamily {
    /// The 10-spaces containing the Golay code and avoiding e_0, sorted by functional.
    std::vector<gf3::Hyperplane> subspaces;
    std::vector<SubspaceType> types;
    std::vector<codes::WeightDistribution> distributions;
    /// flats[3*s + t] is translate t of subspace s.
    std::vector<Flat> flats;
    std::size_t hyperplanes_containing_code = 0;
    std::size_t hyperplanes_containing_e0 = 0;

    std::size_t count(SubspaceType type) const;
};

/// Enumerates the 81 subspaces and types each one by its full weight distribution.
/// Throws DataError naming the tally of any subspace matching neither reference.
FlatFamily classify_types();

enum class Provenance { Orbital, Coordinate };

const char* to_string(Provenance p);

/// A 486-vertex graph with its two vertex classes of 243.
struct LabeledModel {
    Graph graph;
    /// The coset side: block 1..243 for orbital models, the cosets for coordinate models.
    std::vector<Vertex> half_a;
    std::vector<Vertex> half_b;
    Provenance provenance = Provenance::Coordinate;
};

/// Coset graph of the Golay code.
Graph build_gamma();

/// Cosets 0..242 (syndrome order) against flats 243 + (3*s + t); incidence is containment.
LabeledModel build_sigma_coordinate(const FlatFamily& family);
LabeledModel build_sigma_coordinate();

/// Incidence graph of points of AG(n,3) against the translates of the hyperplanes whose
/// canonical functional does not vanish on e_0. Points come first. Requires 2 <= n <= 7.
Graph build_std_ag(std::size_t dimension);

/// Cosets of the Golay code; y ~ z when the leader of y - z is +-e_i with i != 0.
Graph build_lambda_coordinate();

/// The rank-9 action with its orbital decomposition at point 0 (label 1).
struct OrbitalContext {
    permaction::GroupAction action;
    permaction::OrbitalDecomposition decomposition;
    /// Orbital id for each suborbit length; lengths are distinct for this action.
    std::map<std::size_t, std::size_t> id_of_length;
    /// Bipartition of the orbital Koolen-Riebeek graph; coset_half contains the base point.
    std::vector<Vertex> coset_half;
    std::vector<Vertex> flat_half;

    /// Throws StructureError when no suborbit, or more than one, has this length.
    std::size_t id_for_length(std::size_t length) const;
};

/// Parses generator text (the bundled asset by default) and decomposes the action.
OrbitalContext load_orbital_context(std::string_view generator_text = bundled_generators());

enum class OrbitalModel { Delta, Upsilon, Sigma };
enum class OrbitalHalfGraph { Lambda, GammaHalf };

/// Delta = 45-suborbit, Upsilon = 36 + 20, Sigma = 45 + 36.
LabeledModel build_from_orbitals(const OrbitalContext& ctx, OrbitalModel which);
/// Lambda = 20-suborbit, GammaHalf = 2 + 20, each restricted to the coset half.
graph::InducedSubgraph build_from_orbitals(const OrbitalContext& ctx, OrbitalHalfGraph which);

/// The suborbit lengths whose union gives each model.
std::vector<std::size_t> suborbit_lengths(OrbitalModel which);
std::vector<std::size_t> suborbit_lengths(OrbitalHalfGraph which);

struct BlockReport {
    std::size_t blocks = 0;
    std::size_t cocliques = 0;
    std::size_t blocks_of_size_45 = 0;
    bool halved_equals_complement = false;
    /// First failures, as human-readable descriptions.
    std::vector<std::string> counterexamples;

    bool ok() const noexcept {
        return blocks == 243 && cocliques == blocks && blocks_of_size_45 == blocks && halved_equals_complement;
    }
};

/// Checks every flat-side neighbourhood of orbital Delta against GammaHalf, and the
/// coset-side halved Delta against the complement of GammaHalf, on shared labels.
BlockReport verify_koolen_riebeek_blocks(const OrbitalContext& ctx);

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

struct Claim {
    std::string id;
    std::string description;
    std::string expected;
    std::string observed;
    Verdict verdict = Verdict::Skipped;
    double seconds = 0.0;

    bool operator==(const Claim&) const = default;
};

struct CrossVerifyOptions {
    bool run_isomorphism = true;
    graph::IsomorphismOptions isomorphism;
};

/// Isomorphism and folding claims tying the orbital models to the code models.
std::vector<Claim> cross_verify(const OrbitalContext& ctx, const CrossVerifyOptions& options = {});

/// Readings of "a coset G+x is incident with the translates U+x of the Type I subspaces".
enum class IncidenceRule {
    /// Coset y is incident with flat F when F is a translate of a Type I subspace and contains y.
    LiteralTranslates,
};

struct IncidenceExperiment {
    IncidenceRule rule = IncidenceRule::LiteralTranslates;
    Graph graph;
    /// degree -> number of vertices, per side.
    std::map<std::size_t, std::size_t> coset_degrees;
    std::map<std::size_t, std::size_t> flat_degrees;
    /// Degrees of flats grouped by the type of their subspace.
    std::map<SubspaceType, std::map<std::size_t, std::size_t>> flat_degrees_by_type;
    bool regular = false;
    bool connected = false;
    std::optional<graph::IntersectionArray> array;
    std::string summary;
};

/// Builds the incidence graph under the given reading and reports its degrees. It
/// makes no claim about which known graph, if any, it is.
IncidenceExperiment literal_incidence_experiment(const FlatFamily& family,
                                                 IncidenceRule rule = IncidenceRule::LiteralTranslates);

}  // namespace golay486::constructions
