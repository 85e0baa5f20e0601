#include "hopfrob/frob.hpp"

#include <array>
#include <stdexcept>

namespace hopfrob {

namespace {

std::string diff_witness(const Matrix& a, const Matrix& b) {
    auto d = a.first_difference(b);
    return d ? "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")" : "";
}

void check_shapes(const AlgObject& a) {
    const int d = a.dim();
    if (a.mult.rows() != d || a.mult.cols() != d * d) throw std::invalid_argument("mult must be d x d^2");
    if (a.unit.rows() != d || a.unit.cols() != 1) throw std::invalid_argument("unit must be d x 1");
}

void check_shapes(const FrobObject& f) {
    const int d = f.dim();
    if (f.comult.rows() != d * d || f.comult.cols() != d) throw std::invalid_argument("comult must be d^2 x d");
    if (f.counit.rows() != 1 || f.counit.cols() != d) throw std::invalid_argument("counit must be 1 x d");
}

YDModule unit_object(const AlgObject& a) { return trivial_yd(a.carrier.mod.over); }

// Module map, and comodule map when the ambient category is YD.
bool is_morphism(const AlgObject& a, const YDModule& src, const YDModule& dst, const Matrix& f) {
    if (!is_module_map(src.mod, dst.mod, f)) return false;
    return !a.braided || is_comodule_map(src, dst, f);
}

YDModule square(const AlgObject& a) {
    if (a.braided) return yd_tensor(a.carrier, a.carrier);
    return {tensor_modules(a.carrier.mod, a.carrier.mod), Matrix()};
}

YDModule pushed_carrier(const FrobeniusContext& ctx, const AlgObject& a) {
    if (a.braided) return z_induce(ctx, a.carrier);
    return {induce(ctx, a.carrier.mod), Matrix()};
}

const char* klein_label(int bits) {
    static const char* labels[4] = {"1", "x", "y", "xy"};
    return labels[bits & 3];
}

int sign_bit(int s) { return s < 0 ? 1 : 0; }

// (1 + sx + sy - sx sy) / 2, which is -1 exactly when sx = sy = -1.
int c_sign(int sx, int sy) { return (1 + sx + sy - sx * sy) / 2; }

}  // namespace

Report verify_algebra_object(const AlgObject& a) {
    check_shapes(a);
    const int d = a.dim();
    const Matrix id = Matrix::identity(d);
    Report rep;
    rep.title = "algebra object " + a.name();
    Matrix l = a.mult * kron(a.mult, id), r = a.mult * kron(id, a.mult);
    rep.add("associativity", l == r, diff_witness(l, r), "frob.axioms");
    bool lu = (a.mult * kron(a.unit, id)).is_identity(), ru = (a.mult * kron(id, a.unit)).is_identity();
    rep.add("unitality", lu && ru, lu ? "right" : "left", "frob.axioms");
    rep.add("mult_morphism", is_morphism(a, square(a), a.carrier, a.mult), "mult", "frob.axioms");
    rep.add("unit_morphism", is_morphism(a, unit_object(a), a.carrier, a.unit), "unit", "frob.axioms");
    return rep;
}

Report verify_frobenius_object(const FrobObject& f) {
    check_shapes(f);
    Report rep = verify_algebra_object(f);
    rep.title = "frobenius object " + f.name();
    const int d = f.dim();
    const Matrix id = Matrix::identity(d);
    Matrix l = kron(f.comult, id) * f.comult, r = kron(id, f.comult) * f.comult;
    rep.add("coassociativity", l == r, diff_witness(l, r), "frob.axioms");
    bool lc = (kron(f.counit, id) * f.comult).is_identity(), rc = (kron(id, f.counit) * f.comult).is_identity();
    rep.add("counitality", lc && rc, lc ? "right" : "left", "frob.axioms");
    Matrix mid = f.comult * f.mult;
    Matrix s1 = kron(f.mult, id) * kron(id, f.comult), s2 = kron(id, f.mult) * kron(f.comult, id);
    rep.add("frobenius_left", s1 == mid, diff_witness(s1, mid), "frob.axioms");
    rep.add("frobenius_right", s2 == mid, diff_witness(s2, mid), "frob.axioms");
    rep.add("comult_morphism", is_morphism(f, f.carrier, square(f), f.comult), "comult", "frob.axioms");
    rep.add("counit_morphism", is_morphism(f, f.carrier, unit_object(f), f.counit), "counit", "frob.axioms");
    return rep;
}

FrobObject trivial_frobenius(const HopfPtr& h) {
    FrobObject f;
    f.carrier = trivial_yd(h);
    f.carrier.mod.name = "1";
    f.mult = f.unit = f.comult = f.counit = Matrix::scalar(Scalar(1));
    return f;
}

AlgObject push_algebra(const FrobeniusContext& ctx, const AlgObject& a) {
    check_shapes(a);
    AlgObject out;
    out.braided = a.braided;
    out.carrier = pushed_carrier(ctx, a);
    out.carrier.mod.name = "Ind(" + a.name() + ")";
    out.mult = induce_map(ctx, a.mult) * lax(ctx, a.carrier.mod, a.carrier.mod);
    out.unit = induce_map(ctx, a.unit) * lax0(ctx);
    return out;
}

FrobObject push_coalgebra(const FrobeniusContext& ctx, const FrobObject& a) {
    check_shapes(a);
    FrobObject out;
    static_cast<AlgObject&>(out) = push_algebra(ctx, a);
    out.comult = oplax(ctx, a.carrier.mod, a.carrier.mod) * induce_map(ctx, a.comult);
    out.counit = oplax0(ctx) * induce_map(ctx, a.counit);
    return out;
}

FrobObject push_frobenius(const FrobeniusContext& ctx, const FrobObject& a) { return push_coalgebra(ctx, a); }

FrobObject change_basis(const FrobObject& f, const Matrix& p, std::string name) {
    auto inv = inverse(p);
    if (!inv) throw std::invalid_argument("change of basis is singular");
    const Matrix& q = *inv;
    FrobObject out;
    out.braided = f.braided;
    out.carrier.mod = f.carrier.mod;
    if (!name.empty()) out.carrier.mod.name = std::move(name);
    for (auto& m : out.carrier.mod.action) m = q * m * p;
    if (f.braided) out.carrier.coaction = kron(Matrix::identity(f.carrier.over().dim), q) * f.carrier.coaction * p;
    out.mult = q * f.mult * kron(p, p);
    out.unit = q * f.unit;
    out.comult = kron(q, q) * f.comult * p;
    out.counit = f.counit * p;
    return out;
}

FrobObject build_group_etale(const HopfPtr& kk, const std::string& n, int ex, int ey) {
    if (n != "x" && n != "y" && n != "xy") throw std::invalid_argument("n must be x, y or xy");
    if ((ex != 1 && ex != -1) || (ey != 1 && ey != -1)) throw std::invalid_argument("signs must be +1 or -1");
    HModule e1 = klein_character(kk, 1, 1), en = klein_character(kk, ex, ey);
    FrobObject f;
    f.carrier.mod = direct_sum({e1, en});
    f.carrier.mod.name = "A(" + n + "," + std::to_string(ex) + "," + std::to_string(ey) + ")";
    Matrix co(kk->dim * 2, 2);
    co.set(0 * 2 + 0, 0, Scalar(1));
    co.set(kk->index_of(n) * 2 + 1, 1, Scalar(1));
    f.carrier.coaction = co;
    // e_a e_b = e_{a xor b} with e_0 = e_1 and e_1 = e_n.
    f.mult = Matrix(2, 4);
    f.comult = Matrix(4, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) f.mult.set(a ^ b, a * 2 + b, Scalar(1));
    for (int m = 0; m < 2; ++m) {
        f.comult.set(0 * 2 + m, m, Scalar(1));
        f.comult.set(1 * 2 + (1 ^ m), m, Scalar(1));
    }
    f.unit = Matrix::column(unit_vec(0), 2);
    f.counit = Matrix::row_vector(unit_vec(0), 2);
    return f;
}

FrobObject b_algebra(const HopfPtr& h8, const std::string& n, int ex, int ey, const Scalar& t) {
    if (n != "x" && n != "y" && n != "xy") throw std::invalid_argument("n must be x, y or xy");
    if ((ex != 1 && ex != -1) || (ey != 1 && ey != -1)) throw std::invalid_argument("signs must be +1 or -1");
    const int nbits = n == "x" ? 1 : n == "y" ? 2 : 3;
    // Index g * 2 + m for b_{gm}, g in {1, z}, m in {1, n}.  chi_m is the character of e_m.
    const std::array<int, 2> sx{1, ex}, sy{1, ey}, deg{0, nbits};
    auto idx = [](int g, int m) { return g * 2 + m; };
    Matrix X(4, 4), Y(4, 4), Z(4, 4);
    for (int m = 0; m < 2; ++m) {
        X.set(idx(0, m), idx(0, m), Scalar(sx[m]));
        X.set(idx(1, m), idx(1, m), Scalar(sy[m]));
        Y.set(idx(0, m), idx(0, m), Scalar(sy[m]));
        Y.set(idx(1, m), idx(1, m), Scalar(sx[m]));
        Z.set(idx(1, m), idx(0, m), Scalar(1));
        Z.set(idx(0, m), idx(1, m), Scalar(c_sign(sx[m], sy[m])));
    }
    FrobObject f;
    f.carrier.mod = module_from_generators(h8, {h8->index_of("x"), h8->index_of("y"), h8->index_of("z")}, {X, Y, Z},
                                           "B(" + n + "," + std::to_string(ex) + "," + std::to_string(ey) + ")");
    // delta(b_1m) = m (x) b_1m; delta(b_zm) = swap(m) c_m (x) b_zm, c_m = x^[chi_m(x)=-1] y^[chi_m(y)=-1].
    Matrix co(h8->dim * 4, 4);
    for (int m = 0; m < 2; ++m) {
        int sw = ((deg[m] & 1) << 1) | ((deg[m] & 2) >> 1);
        int c = sign_bit(sx[m]) | (sign_bit(sy[m]) << 1);
        co.set(h8->index_of(klein_label(deg[m])) * 4 + idx(0, m), idx(0, m), Scalar(1));
        co.set(h8->index_of(klein_label(sw ^ c)) * 4 + idx(1, m), idx(1, m), Scalar(1));
    }
    f.carrier.coaction = co;
    f.mult = Matrix(4, 16);
    f.comult = Matrix(16, 4);
    for (int g = 0; g < 2; ++g)
        for (int m = 0; m < 2; ++m) {
            // z (b_1m b_1m') = c(chi_m(x), chi_m'(y)) b_zm b_zm' forces the sign on b_zm b_zm'.
            for (int m2 = 0; m2 < 2; ++m2)
                f.mult.set(idx(g, m ^ m2), idx(g, m) * 4 + idx(g, m2), g == 0 ? t : t * Scalar(c_sign(sx[m], sy[m2])));
            // Delta_A(e_m) = sum e_a (x) e_b with b = a xor m.
            for (int a = 0; a < 2; ++a) {
                int b = a ^ m;
                Scalar c = g == 0 ? Scalar(1) : Scalar(c_sign(sx[a], sy[b]));
                if (!c.is_zero()) f.comult.set(idx(g, a) * 4 + idx(g, b), idx(g, m), c);
            }
        }
    Scalar inv_t = Scalar(1) / t;
    f.unit = Matrix(4, 1);
    f.unit.set(idx(0, 0), 0, inv_t);
    f.unit.set(idx(1, 0), 0, inv_t);
    f.counit = Matrix(1, 4);
    f.counit.set(0, idx(0, 0), Scalar(1));
    f.counit.set(0, idx(1, 0), Scalar(1));
    return f;
}

FrobObject zone_h(const HopfPtr& h8, const Scalar& t) {
    const int z = h8->index_of("z");
    Matrix Z = Matrix::from_dense({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}});
    FrobObject f;
    f.carrier.mod = module_from_generators(h8, {h8->index_of("x"), h8->index_of("y"), z},
                                           {Matrix::identity(2), Matrix::identity(2), Z}, "A");
    f.carrier.coaction = trivial_coaction(*h8, 2);
    // Basis {1_A, a}: a^2 = 1_A, Delta(1_A) = t/2 (1 (x) 1 + a (x) a), Delta(a) = t/2 (1 (x) a + a (x) 1).
    Scalar half_t = t / Scalar(2);
    f.mult = Matrix(2, 4);
    f.mult.set(0, 0, Scalar(1));
    f.mult.set(1, 1, Scalar(1));
    f.mult.set(1, 2, Scalar(1));
    f.mult.set(0, 3, Scalar(1));
    f.comult = Matrix(4, 2);
    f.comult.set(0, 0, half_t);
    f.comult.set(3, 0, half_t);
    f.comult.set(1, 1, half_t);
    f.comult.set(2, 1, half_t);
    f.unit = Matrix::column(unit_vec(0), 2);
    f.counit = Matrix::row_vector({{0, Scalar(2) / t}}, 2);
    return f;
}

FrobObject zone_h_pushed(const FrobeniusContext& ctx) {
    if (ctx.K().dim * 2 != ctx.H().dim || ctx.r != 2) throw std::invalid_argument("zone_h_pushed expects kK in H8");
    FrobObject pushed = push_frobenius(ctx, trivial_frobenius(ctx.incl.K));
    Scalar t = coeff(ctx.tr_of(ctx.H().unit), 0);
    // Carrier basis b_0 (x) 1, b_1 (x) 1 with b_0 = 1 and b_1 = z.
    SparseVec one = pushed.unit.col(0);
    SparseVec a = collect(std::vector<std::pair<int, Scalar>>{{0, Scalar(1) / t}, {1, Scalar(-1) / t}});
    return change_basis(pushed, Matrix::from_columns(2, {one, a}), "Z(Ind)(1)");
}

bool is_commutative_object(const AlgObject& a) {
    check_shapes(a);
    if (!a.braided) throw std::invalid_argument("commutativity needs a braided carrier");
    return a.mult * yd_braiding(a.carrier, a.carrier) == a.mult;
}

std::optional<std::pair<Scalar, Scalar>> is_special(const FrobObject& f) {
    check_shapes(f);
    auto ba = (f.mult * f.comult).scalar_multiple_of_identity();
    Scalar b1 = (f.counit * f.unit).at(0, 0);
    if (!ba || ba->is_zero() || b1.is_zero()) return std::nullopt;
    return std::make_pair(*ba, b1);
}

int invariant_dimension(const AlgObject& a) {
    const int d = a.dim();
    const FinHopf& h = a.carrier.over();
    std::vector<SparseVec> rows;
    for (int x = 0; x < h.dim; ++x) {
        Matrix m = a.carrier.mod.action[x] - Matrix::identity(d).scaled(coeff(h.counit, x));
        for (int i = 0; i < d; ++i) rows.push_back(m.row(i));
    }
    if (a.braided) {
        // delta(v) - 1 (x) v has rows h * d + i.
        Matrix m = a.carrier.coaction - kron(Matrix::column(h.unit, h.dim), Matrix::identity(d));
        for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    }
    Matrix sys(static_cast<int>(rows.size()), d);
    for (int i = 0; i < sys.rows(); ++i) sys.set_row(i, rows[i]);
    return d - rank(sys);
}

bool is_connected(const AlgObject& a) { return invariant_dimension(a) == 1; }

RigidReport is_rigid_frobenius(const FrobObject& f) {
    RigidReport r;
    r.details = verify_frobenius_object(f);
    r.frobenius = r.details.all_pass();
    r.commutative = is_commutative_object(f);
    r.betas = is_special(f);
    r.special = r.betas.has_value();
    r.invariant_dim = invariant_dimension(f);
    r.connected = r.invariant_dim == 1;
    r.details.add("commutative", r.commutative, "m Psi != m", "frob.rigid");
    r.details.add("special", r.special, "m Delta or eps u", "frob.rigid",
                  r.betas ? "beta_A=" + r.betas->first.str() + " beta_1=" + r.betas->second.str() : "");
    r.details.add("connected", r.connected, "dim Hom(1,A)=" + std::to_string(r.invariant_dim), "frob.rigid");
    return r;
}

}  // namespace hopfrob
