#include "rfh/problem.hpp"

namespace rfh {

std::vector<Violation> validate_problem(const GysinProblem& p)
{
    std::vector<Violation> out;
    if (p.dim_sigma < 0 || p.dim_sigma % 2 != 0)
        out.push_back({"dim_sigma must be even and nonnegative"});

    if (p.delta.shift() != -2)
        out.push_back({"delta must have degree shift -2"});
    if (p.delta.source() != p.basis || p.delta.target() != p.basis)
        out.push_back({"delta must be an endomorphism of the problem basis"});
    if (!(p.delta.grading() == p.grading))
        out.push_back({"delta grading differs from the problem grading"});
    if (p.delta.ring() != p.ring)
        out.push_back({"delta ring differs from the problem ring"});
    for (Violation& v : validate(p.delta))
        out.push_back({"delta: " + v.message});

    if (p.boundary) {
        const GradedMap& b = *p.boundary;
        if (b.shift() != -1)
            out.push_back({"boundary must have degree shift -1"});
        if (b.source() != p.basis || b.target() != p.basis)
            out.push_back({"boundary must be an endomorphism of the problem basis"});
        if (!(b.grading() == p.grading) || b.ring() != p.ring)
            out.push_back({"boundary grading/ring differs from the problem"});
        for (Violation& v : validate(b))
            out.push_back({"boundary: " + v.message});
        if (out.empty()) {
            if (!compose(b, b).is_zero())
                out.push_back({"boundary does not square to zero"});
            if (!(compose(p.delta, b) == compose(b, p.delta)))
                out.push_back({"delta does not commute with the boundary"});
        }
    }

    if (p.delta_c_coeff != 0) {
        if (!p.grading.is_periodic() || p.grading.deg_t() != 2)
            out.push_back({"nonzero delta_c requires a periodic grading with deg_T = 2"});
        if (p.ring == Ring::Z && !is_integral(p.delta_c_coeff))
            out.push_back({"delta_c coefficient must be an integer over Z"});
        if (p.metadata.m_w && *p.metadata.m_w != 0 && is_integral(p.delta_c_coeff)) {
            if (to_int(p.delta_c_coeff) % *p.metadata.m_w != 0)
                out.push_back({"m_W does not divide the delta_c coefficient"});
        }
    }
    return out;
}

void require_valid_problem(const GysinProblem& p)
{
    std::vector<Violation> v = validate_problem(p);
    if (!v.empty())
        throw Error(ErrorKind::InvalidProblem, "invalid problem \"" + p.label + "\": " + v.front().message);
}

namespace {

GradedMap reringed(const GradedMap& m, Ring ring)
{
    if (ring == Ring::Z)
        for (const MapEntry& e : m.entries())
            if (!is_integral(e.coeff))
                throw Error(ErrorKind::DomainError,
                            "cannot view map over Z: coefficient " + scalar_to_string(e.coeff) +
                                " at " + e.from + " -> " + e.to + " is not an integer");
    return GradedMap(m.source(), m.target(), m.shift(), m.grading(), ring, m.entries());
}

} // namespace

GysinProblem with_ring(const GysinProblem& p, Ring ring)
{
    if (ring == p.ring) return p;
    GysinProblem q = p;
    q.ring = ring;
    q.delta = reringed(p.delta, ring);
    if (p.boundary) q.boundary = reringed(*p.boundary, ring);
    if (ring == Ring::Z && !is_integral(p.delta_c_coeff))
        throw Error(ErrorKind::DomainError, "cannot view delta_c over Z");
    return q;
}

} // namespace rfh
