#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cobord/errors.hpp"
#include "cobord/intmat.hpp"
#include "cobord/numeric.hpp"
#include "cobord/ring.hpp"

namespace cobord::lazard {

// Generator A_{ij} of the free ring, i,j >= 1. Codegree i+j-1 (the element
// sits in cohomological degree 1-i-j). Generators are totally ordered by
// (codegree asc, i desc); the order fixes pivoting and hence the canonical
// bases, so it must never change.
struct Gen {
    int i = 0, j = 0;
    int codegree() const { return i + j - 1; }
    bool operator==(const Gen& o) const { return i == o.i && j == o.j; }
};

bool gen_before(const Gen& a, const Gen& b);
bool gen_eq(const Gen& a, const Gen& b);

// Monomial in the generators: sorted factor list, exponents > 0.
struct AMono {
    std::vector<std::pair<Gen, int>> factors;

    static AMono one() { return AMono{}; }
    static AMono gen(int i, int j) { return AMono{{{Gen{i, j}, 1}}}; }
    bool is_one() const { return factors.empty(); }
    int codegree() const;
    bool operator==(const AMono& o) const { return factors == o.factors; }
};

AMono amono_mul(const AMono& a, const AMono& b);
// Column order: graded, then "larger exponent on an earlier generator
// comes first" within a codegree.
bool amono_before(const AMono& a, const AMono& b);
bool amono_eq(const AMono& a, const AMono& b);
std::string amono_str(const AMono& m);
AMono amono_parse(const std::string& s);

struct AMonoLess {
    bool operator()(const AMono& a, const AMono& b) const { return amono_before(a, b); }
};

// Element of the free ring Z[A_ij].
using APoly = std::map<AMono, Int, AMonoLess>;

APoly apoly_one();
APoly apoly_gen(int i, int j);
APoly apoly_add(const APoly& a, const APoly& b);
APoly apoly_sub(const APoly& a, const APoly& b);
APoly apoly_scale(const APoly& a, const Int& k);
APoly apoly_mul(const APoly& a, const APoly& b);
APoly apoly_mul_mono(const APoly& a, const AMono& m);
std::string apoly_str(const APoly& p);

// Relations harvested from the axioms of the universal formal group law
// F(u,v) = u + v + sum A_ij u^i v^j: unitality F(u,0)=u, commutativity
// F(u,v)=F(v,u), associativity F(F(u,v),w)=F(u,F(v,w)), expanded in u,v,w
// to total degree max_codegree+2 and collected coefficient by coefficient.
// The coefficient of u^a v^b w^c is homogeneous of codegree a+b+c-1.
struct Harvest {
    int max_codegree = 0;
    int expansion_degree = 0;
    // by_codegree[d] = generator relations of codegree d, d <= max_codegree+1
    std::vector<std::vector<APoly>> by_codegree;

    std::vector<APoly> flatten(int up_to_codegree) const;
};

Harvest harvest_relations(int max_codegree);

struct BuildLimits {
    // per-codegree relation matrix budget (rows * cols)
    long max_matrix_entries = 8000000;
};

// Per-codegree canonical presentation of the Lazard ring as a quotient of
// the free ring: column-ordered monomials, the diagonalizing column
// transform of the relation lattice, the induced free basis of the
// quotient, and the canonical reduction onto it. Immutable once built.
class Table {
public:
    static std::shared_ptr<const Table> build(int max_codegree, const BuildLimits& limits = {});

    // Reassembly from persisted reduction data. Monomials are re-enumerated
    // and relations re-harvested; the parts are validated (relations reduce
    // to zero, basis representatives reduce to unit coordinates, the low
    // codegree bases are {1} and {a11}) before the table is returned.
    struct PieceData {
        IMat v;
        int rel_rank = 0;
        std::vector<APoly> basis;
    };
    static std::shared_ptr<const Table> from_parts(int max_codegree,
                                                   std::vector<PieceData> parts);

    int max_codegree() const { return max_codegree_; }
    int rank(int codegree) const;
    const std::vector<AMono>& monomials(int codegree) const;
    // canonical representatives, one APoly per basis coordinate
    const std::vector<APoly>& basis(int codegree) const;
    const Harvest& harvest() const { return harvest_; }

    // reduction of a coefficient vector over monomials(codegree) to
    // canonical basis coordinates; integer-linear and idempotent
    std::vector<Int> reduce(int codegree, const std::vector<Int>& monomial_vec) const;

    int monomial_index(int codegree, const AMono& m) const;  // -1 if absent

    // Reduction data, exposed for persistence.
    const IMat& transform(int codegree) const;
    int relation_rank(int codegree) const;

    // Relation matrix for one codegree (monomial multiples of all harvested
    // generator relations). Exposed for verification and tests.
    IMat relation_matrix(int codegree) const;

    std::string basis_label(int codegree, int index) const;

private:
    struct Piece {
        std::vector<AMono> monomials;
        std::map<AMono, int, AMonoLess> index;
        IMat v;  // column transform of the diagonalized relation matrix
        int rel_rank = 0;
        IMat hnf;  // canonical HNF of the relation lattice
        std::vector<int> hnf_pivots;
        std::vector<APoly> basis;
    };

    Table() = default;
    void check_low_codegrees(ErrorKind kind) const;

    int max_codegree_ = 0;
    Harvest harvest_;
    std::vector<Piece> pieces_;

    mutable std::mutex ring_mutex_;
    mutable std::weak_ptr<const CoeffRing> ring_cache_;

    friend RingHandle lazard_ring(const std::shared_ptr<const Table>& table);
};

using TableHandle = std::shared_ptr<const Table>;

// The Lazard ring as a coefficient ring backed by a table. Handles are
// cached per table so that identity comparison works.
RingHandle lazard_ring(const TableHandle& table);
// The table behind a handle produced by lazard_ring (null for other rings).
TableHandle table_of(const RingHandle& ring);

// Canonical coordinates of a free-ring element; monomials past the table
// depth are dropped and flagged on the result.
RElem normalize(const TableHandle& table, const APoly& expr);

RElem basis_element(const TableHandle& table, int codegree, int index);

// Product in canonical coordinates. Elements must come from the same table.
RElem lazard_mul(const RElem& x, const RElem& y);

}  // namespace cobord::lazard
