#include "rfh/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rfh {

GradedBasis::GradedBasis(std::vector<Generator> gens) : gens_(std::move(gens))
{
    std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) {
        return std::tie(a.degree, a.label) < std::tie(b.degree, b.label);
    });
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!index_.emplace(gens_[i].label, i).second)
            throw Error(ErrorKind::DomainError, "duplicate generator label \"" + gens_[i].label + "\"");
    }
}

int GradedBasis::degree_of(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error(ErrorKind::DomainError, "unknown generator label \"" + label + "\"");
    return gens_[it->second].degree;
}

std::vector<ComponentElement> degree_component_basis(const GradedBasis& basis,
                                                     const NovikovGrading& grading, int d)
{
    std::vector<ComponentElement> out;
    for (const Generator& g : basis.generators()) {
        if (grading.is_periodic()) {
            int diff = d - g.degree;
            int p = grading.deg_t();
            if (diff % p != 0) continue;
            out.push_back({g.label, g.degree, diff / p});
        } else if (g.degree == d) {
            out.push_back({g.label, g.degree, 0});
        }
    }
    return out;  // basis order is already (degree, label)
}

GradedMap::GradedMap(GradedBasis source, GradedBasis target, int shift, NovikovGrading grading,
                     Ring ring, std::vector<MapEntry> entries)
    : source_(std::move(source)),
      target_(std::move(target)),
      shift_(shift),
      grading_(grading),
      ring_(ring),
      entries_(std::move(entries))
{
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const MapEntry& e) { return e.coeff == 0; }),
                   entries_.end());
    std::sort(entries_.begin(), entries_.end(), [](const MapEntry& a, const MapEntry& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
}

bool GradedMap::is_zero() const { return entries_.empty(); }

int GradedMap::forced_exponent(const std::string& from, const std::string& to) const
{
    int s = source_.degree_of(from);
    int t = target_.degree_of(to);
    if (!grading_.is_periodic()) return 0;
    int num = s + shift_ - t;
    return num / grading_.deg_t();
}

bool GradedMap::operator==(const GradedMap& rhs) const
{
    return source_ == rhs.source_ && target_ == rhs.target_ && shift_ == rhs.shift_ &&
           grading_ == rhs.grading_ && ring_ == rhs.ring_ && entries_ == rhs.entries_;
}

std::vector<Violation> validate(const GradedMap& map)
{
    std::vector<Violation> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (const MapEntry& e : map.entries()) {
        bool known = true;
        if (!map.source().contains(e.from)) {
            out.push_back({"unknown source label \"" + e.from + "\""});
            known = false;
        }
        if (!map.target().contains(e.to)) {
            out.push_back({"unknown target label \"" + e.to + "\""});
            known = false;
        }
        if (!known) continue;
        if (!seen.insert({e.from, e.to}).second)
            out.push_back({"duplicate entry " + e.from + " -> " + e.to});
        int s = map.source().degree_of(e.from);
        int t = map.target().degree_of(e.to);
        int num = s + map.shift() - t;
        if (map.grading().is_periodic()) {
            if (num % map.grading().deg_t() != 0) {
                std::ostringstream os;
                os << "entry " << e.from << " -> " << e.to << " violates the degree congruence: "
                   << t << " != " << s << " + (" << map.shift() << ") mod " << map.grading().deg_t();
                out.push_back({os.str()});
            }
        } else if (num != 0) {
            std::ostringstream os;
            os << "entry " << e.from << " -> " << e.to << " violates the degree constraint: " << t
               << " != " << s << " + (" << map.shift() << ")";
            out.push_back({os.str()});
        }
        if (map.ring() == Ring::Z && !is_integral(e.coeff))
            out.push_back({"entry " + e.from + " -> " + e.to + " has a non-integer coefficient over Z"});
    }
    return out;
}

namespace {

void require_valid(const GradedMap& map)
{
    std::vector<Violation> v = validate(map);
    if (!v.empty())
        throw Error(ErrorKind::InvalidMap, "invalid graded map: " + v.front().message);
}

} // namespace

ExactMatrix degree_slice(const GradedMap& map, int d)
{
    require_valid(map);
    std::vector<ComponentElement> src = degree_component_basis(map.source(), map.grading(), d);
    std::vector<ComponentElement> tgt =
        degree_component_basis(map.target(), map.grading(), d + map.shift());
    std::map<std::string, std::size_t> src_index, tgt_index;
    for (std::size_t j = 0; j < src.size(); ++j) src_index[src[j].label] = j;
    for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index[tgt[i].label] = i;

    ExactMatrix m(tgt.size(), src.size(), map.ring());
    for (const MapEntry& e : map.entries()) {
        auto js = src_index.find(e.from);
        if (js == src_index.end()) continue;
        // The congruence guarantees the target label lies in the shifted
        // component whenever the source label lies in the degree-d one.
        auto is = tgt_index.find(e.to);
        if (is == tgt_index.end())
            throw Error(ErrorKind::Internal, "slice target component misses label " + e.to);
        m.at(is->second, js->second) = e.coeff;
    }
    return m;
}

GradedMap add(const GradedMap& f, const GradedMap& g)
{
    if (f.source() != g.source() || f.target() != g.target() || f.shift() != g.shift() ||
        !(f.grading() == g.grading()) || f.ring() != g.ring())
        throw Error(ErrorKind::ShapeMismatch, "add: maps have different shapes");
    std::map<std::pair<std::string, std::string>, Rat> acc;
    for (const MapEntry& e : f.entries()) acc[{e.from, e.to}] += e.coeff;
    for (const MapEntry& e : g.entries()) acc[{e.from, e.to}] += e.coeff;
    std::vector<MapEntry> entries;
    for (auto& [key, c] : acc)
        if (c != 0) entries.push_back({key.first, key.second, c});
    return GradedMap(f.source(), f.target(), f.shift(), f.grading(), f.ring(), std::move(entries));
}

GradedMap compose(const GradedMap& f, const GradedMap& g)
{
    if (g.target() != f.source() || !(f.grading() == g.grading()) || f.ring() != g.ring())
        throw Error(ErrorKind::ShapeMismatch, "compose: maps are not composable");
    std::map<std::pair<std::string, std::string>, Rat> acc;
    for (const MapEntry& eg : g.entries())
        for (const MapEntry& ef : f.entries())
            if (ef.from == eg.to) acc[{eg.from, ef.to}] += eg.coeff * ef.coeff;
    std::vector<MapEntry> entries;
    for (auto& [key, c] : acc)
        if (c != 0) entries.push_back({key.first, key.second, c});
    return GradedMap(g.source(), f.target(), f.shift() + g.shift(), f.grading(), f.ring(),
                     std::move(entries));
}

GradedMap scale(const Rat& c, const GradedMap& f)
{
    std::vector<MapEntry> entries;
    if (c != 0)
        for (const MapEntry& e : f.entries()) entries.push_back({e.from, e.to, c * e.coeff});
    return GradedMap(f.source(), f.target(), f.shift(), f.grading(), f.ring(), std::move(entries));
}

GradedMap scalar_tpower_identity(const GradedBasis& basis, const NovikovGrading& grading,
                                 Ring ring, const Rat& c, int k)
{
    if (!grading.is_periodic() && k != 0)
        throw Error(ErrorKind::DomainError,
                    "scalar_tpower_identity: nonzero T-power needs a periodic grading");
    int shift = grading.is_periodic() ? k * grading.deg_t() : 0;
    std::vector<MapEntry> entries;
    if (c != 0)
        for (const Generator& g : basis.generators()) entries.push_back({g.label, g.label, c});
    return GradedMap(basis, basis, shift, grading, ring, std::move(entries));
}

} // namespace rfh
