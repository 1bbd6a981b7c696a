#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genelab/rng.hpp"

namespace genelab::cgp {

// Operator set of the distance-function graphs. Order is fixed and versioned:
// genomes reference operators by index, so reordering would silently change
// the meaning of every serialized genome.
enum class Op : int {
  Add = 0,
  Sub,
  Mul,
  Div,  // protected: a / |b|
  Abs,
  Exp,
  Sin,
  Cos,
  Log,
  Sqrt,  // protected: sqrt(|a|)
  Lt,
  Gt,
};

inline constexpr int kNumOps = 12;

int op_arity(Op op);
bool op_protected(Op op);
const char* op_name(Op op);

// Totalized operator application: protected div/sqrt take absolute values,
// comparisons return exactly 0.0/1.0, and any non-finite result becomes 0.0.
double apply_op(Op op, double a, double b);

// Input layout: slots 0..5 are the latent coordinates [x1,y1,z1,x2,y2,z2] of
// the two neurons, slot 6 is the constant 0.1 and slot 7 the constant 1.0.
inline constexpr int kCoordInputs = 6;
inline constexpr int kNumInputs = 8;
inline constexpr int kNumNodes = 64;
inline constexpr std::array<double, 2> kConstants{0.1, 1.0};
extern const std::array<const char*, kCoordInputs> kCoordNames;

struct NodeGene {
  int fn;   // operator index, < kNumOps
  int in1;  // input slot or earlier node, < kNumInputs + position
  int in2;  // same range; ignored by unary operators but still mutable

  bool operator==(const NodeGene&) const = default;
};

// Fixed-size single-row CGP genome with unrestricted levels-back. Node at
// position k occupies value index kNumInputs + k.
struct Genome {
  std::array<NodeGene, kNumNodes> nodes{};
  int output = 0;

  bool operator==(const Genome&) const = default;
};

// Feed-forward and range validation. Returns false and fills `why` (when
// given) on the first violated constraint.
bool validate(const Genome& g, std::string* why = nullptr);

// Node positions reachable backward from the output gene, ascending.
std::vector<int> active_nodes(const Genome& g);

// Coordinate input slots (0..5 only, constants excluded) referenced by the
// output gene or any active node. Ascending.
std::vector<int> used_coordinate_inputs(const Genome& g);

double eval_genome(const Genome& g, std::span<const double, 6> coords);

// Evaluation with a precomputed active set, for tight decode loops.
double eval_genome(const Genome& g, std::span<const int> active,
                   std::span<const double, 6> coords);

Genome random_genome(Rng& rng);

// Each function gene is independently resampled with probability p_fn, each
// connection gene and the output gene with probability p_in, all uniform over
// their legal ranges.
Genome mutate(const Genome& g, Rng& rng, double p_fn, double p_in);

// Line format "CGPv1; nodes=64; fn,in1,in2 ... ; out=idx".
std::string serialize(const Genome& g);
Genome deserialize(std::string_view text);  // throws std::invalid_argument

// DOT description of the active subgraph. Inputs are boxes, operators
// ellipses, the output a diamond.
std::string to_dot(const Genome& g);

}  // namespace genelab::cgp
