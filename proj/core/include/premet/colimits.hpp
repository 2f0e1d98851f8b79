#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "premet/id_set.hpp"
#include "premet/limits.hpp"
#include "premet/space.hpp"
#include "premet/value_lattice.hpp"

namespace premet {

/// M: every assignment h : Y → (positive representatives of V).
struct FunctionGround {
  std::vector<Value> representatives;
  /// Ground ids: composite ids of the per-point value ids.
  IdSetPtr ground;
  /// functions[i][y] indexes representatives for the ground element i.
  std::vector<std::vector<std::size_t>> functions;
};

/// Throws SizeLimitExceeded when |M| passes limits.max_functions.
FunctionGround function_ground(const ContinuitySpace& source, const SizeLimits& limits = {});

/// Which paths count when a radius assignment h admits a pair of labels.
/// `paths`: alternating ball and glue steps of any length, so admission is
/// transitive. `one_step`: a = b, or a single ball step from a point
/// labelled a to a point labelled b.
enum class Admission { one_step, paths };

/// Gluing data for the final structure: each source point carries the label
/// of its image (a target point, or an equivalence class).
struct AdmitsInstance {
  SpacePtr source;
  std::vector<std::size_t> labels;
  std::size_t label_count = 0;
};

/// Instance of a total assignment Y → X, with |X| = `target_size`.
AdmitsInstance admits_instance(SpacePtr source, Assignment f, std::size_t target_size);

/// Precomputed balls B_r(y) for every representative r, shared by all
/// admits queries on one instance.
class AdmitsGraph {
 public:
  AdmitsGraph(AdmitsInstance inst, const FunctionGround& functions);

  const AdmitsInstance& instance() const noexcept { return inst_; }

  /// An alternating ball-step/glue-step path leads from a point labelled `a`
  /// to one labelled `b` under the radii h. Since both step kinds allow a
  /// trivial self-step this is plain reachability. Throws PointNotInImage.
  bool admits(const std::vector<std::size_t>& h, std::size_t a, std::size_t b) const;

  /// A ball of radius h(y) around some y labelled `a` meets a point labelled
  /// `b`. Throws PointNotInImage.
  bool admits_in_one_step(const std::vector<std::size_t>& h, std::size_t a, std::size_t b) const;

  /// Labels admitted from each label under h; rows of unused labels are empty.
  std::vector<Bitset> admitted_labels(const std::vector<std::size_t>& h, Admission mode) const;

 private:
  AdmitsInstance inst_;
  // balls_[y][r] = B_{representatives[r]}(y)
  std::vector<std::vector<Bitset>> balls_;
  // points carrying each label
  std::vector<Bitset> fibres_;
};

/// H(a, b) = {h ∈ M : h admits (a, b)}, as a subset of M's ground.
Bitset admit_set(const AdmitsGraph& graph, const FunctionGround& functions, std::size_t a,
                 std::size_t b, Admission mode = Admission::one_step);

/// (X, Ω(M), m): m(a, b) = ↓H(a, b) on image labels, bottom on the diagonal
/// and top otherwise, so unlabelled points are isolated. Only `one_step`
/// makes every map whose composite with the labelling is ε-δ continuous
/// continuous itself; `paths` closes balls transitively and can lose that.
ContinuitySpace final_space(const AdmitsInstance& inst, const IdSet& points,
                            const SizeLimits& limits = {},
                            Admission mode = Admission::one_step);

/// Summands tagged by position; distances φ_j(d_j) within a summand, top
/// across. Legs are the injections.
Lift coproduct(std::span<const SpacePtr> spaces, const SizeLimits& limits = {});

/// Ground N of the coproduct lattice and the embedding φ_j of summand j.
struct CoproductGround {
  std::vector<ValueLattice> lattices;
  std::vector<std::vector<Value>> representatives;
  IdSetPtr ground;
  /// offsets[j][r] = ground index of representative r of summand j.
  std::vector<std::vector<std::size_t>> offsets;
};

CoproductGround coproduct_ground(std::span<const SpacePtr> spaces, const SizeLimits& limits = {});

/// φ_j(a) = ↓({r ≻ a : r from summand j} ∪ all representatives of the others).
DownSetFamily coproduct_embed(const CoproductGround& ground, std::size_t summand, const Value& a);

/// Labels from a partition given as blocks of point ids; unmentioned points
/// are singleton classes. Throws PointNotInSpace and InvalidInput on
/// overlapping blocks. Class ids are composite ids of their members.
struct Partition {
  std::vector<std::size_t> labels;
  IdSet class_ids;
};
Partition partition_from_blocks(const IdSet& points,
                                const std::vector<std::vector<std::string>>& blocks);

/// Quotient by the partition with the final structure; the leg is the
/// quotient map.
Lift coequaliser(SpacePtr space, const std::vector<std::vector<std::string>>& blocks,
                 const SizeLimits& limits = {}, Admission mode = Admission::one_step);

struct CoconeLeg {
  SpacePtr source;
  Assignment assignment;
};

/// Coproduct of the sources followed by the final structure of the induced
/// map into `points`. Legs are the given assignments.
Lift final_lift(const IdSet& points, std::span<const CoconeLeg> legs, const SizeLimits& limits = {},
                Admission mode = Admission::one_step);

}  // namespace premet
