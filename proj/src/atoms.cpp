#include "dlo/atoms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dlo {

Atom::Atom(std::size_t arity, ParamSet params, std::vector<Block> blocks)
    : arity_(arity), params_(std::move(params)), blocks_(std::move(blocks)) {
    std::vector<int> seen(arity_, 0);
    std::size_t next_pin = 0;
    for (auto& b : blocks_) {
        std::sort(b.vars.begin(), b.vars.end());
        for (auto v : b.vars) {
            if (v >= arity_ || seen[v]++) throw std::invalid_argument("atom: bad variable assignment");
        }
        if (b.pin) {
            if (next_pin >= params_.size() || params_[next_pin] != *b.pin)
                throw std::invalid_argument("atom: pinned blocks must follow the parameters in order");
            ++next_pin;
        } else if (b.vars.empty()) {
            throw std::invalid_argument("atom: free block without variables");
        }
    }
    if (next_pin != params_.size()) throw std::invalid_argument("atom: every parameter needs a pinned block");
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(arity_))
        throw std::invalid_argument("atom: every variable needs a block");
}

std::size_t Atom::height() const {
    return static_cast<std::size_t>(std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.free(); }));
}

GapVector Atom::gaps() const {
    GapVector g = zero_gaps(params_.gap_count());
    std::size_t gap = 0;
    for (const auto& b : blocks_) {
        if (b.pin) ++gap;
        else ++g.counts[gap];
    }
    return g;
}

std::vector<Rational> Atom::sample_point() const {
    std::vector<Rational> point(arity_);
    std::vector<std::size_t> pending;  // free blocks of the current gap, top-down
    std::size_t gap = 0;
    auto flush = [&] {
        const std::size_t count = pending.size();
        const bool has_upper = gap > 0;
        const bool has_lower = gap < params_.size();
        for (std::size_t k = 0; k < count; ++k) {
            const auto rank = static_cast<long>(count - k);  // 1 for the lowest block
            Rational v;
            if (has_upper && has_lower) {
                const Rational& hi = params_[gap - 1];
                const Rational& lo = params_[gap];
                v = lo + (hi - lo) * Rational(rank, static_cast<long>(count + 1));
            } else if (has_lower) {
                v = params_[gap] + rank;
            } else if (has_upper) {
                v = params_[gap - 1] - static_cast<long>(k + 1);
            } else {
                v = rank;
            }
            v.canonicalize();
            for (auto var : blocks_[pending[k]].vars) point[var] = v;
        }
        pending.clear();
    };
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].free()) {
            pending.push_back(i);
            continue;
        }
        flush();
        for (auto var : blocks_[i].vars) point[var] = *blocks_[i].pin;
        ++gap;
    }
    flush();
    return point;
}

std::string Atom::to_string(std::span<const std::string> names) const {
    if (blocks_.empty()) return "true";
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += " > ";
        const auto& b = blocks_[i];
        std::vector<std::string> parts;
        if (b.pin) parts.push_back(dlo::to_string(*b.pin));
        for (std::size_t v : b.vars) parts.push_back(v < names.size() ? names[v] : "x" + std::to_string(v + 1));
        for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? " = " : "") + parts[k];
    }
    return s;
}

std::string Atom::to_string() const { return to_string(default_names(arity_)); }

PositiveDNF Atom::to_dnf() const {
    auto rep = [](const Block& b) { return b.pin ? Term::constant(*b.pin) : Term::var(b.vars.front()); };
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Term r = rep(blocks_[i]);
        for (auto v : blocks_[i].vars)
            if (Term::var(v) != r) cs.push_back({Term::var(v), Rel::Equal, r});
        if (i + 1 < blocks_.size()) cs.push_back({rep(blocks_[i + 1]), Rel::Less, r});
    }
    auto clause = make_clause(std::move(cs));
    if (!clause) throw std::logic_error("atom with unsatisfiable defining clause");
    return PositiveDNF(arity_, {std::move(*clause)});
}

Color color_of(const Atom& a) { return {a.params(), a.gaps()}; }

namespace {

// Every ordered set partition of `items`, as a list of blocks top-down.
void ordered_partitions(const std::vector<std::size_t>& items,
                        const std::function<void(std::vector<std::vector<std::size_t>>&)>& emit) {
    std::vector<std::vector<std::size_t>> prefix;
    std::function<void(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> left) {
        if (left.empty()) {
            emit(prefix);
            return;
        }
        const std::size_t m = left.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<std::size_t> block, rest;
            for (std::size_t i = 0; i < m; ++i) (mask >> i & 1 ? block : rest).push_back(left[i]);
            prefix.push_back(std::move(block));
            rec(std::move(rest));
            prefix.pop_back();
        }
    };
    rec(items);
}

}  // namespace

std::vector<Atom> enumerate_atoms(std::size_t n, const ParamSet& params) {
    // Slot 2i is gap i, slot 2i+1 is the pin of params[i].
    const std::size_t k = params.size();
    const std::size_t slots = 2 * k + 1;
    std::vector<Atom> out;
    std::vector<std::size_t> slot_of(n, 0);
    std::function<void(std::size_t)> assign = [&](std::size_t var) {
        if (var < n) {
            for (std::size_t s = 0; s < slots; ++s) {
                slot_of[var] = s;
                assign(var + 1);
            }
            return;
        }
        std::vector<std::vector<std::size_t>> members(slots);
        for (std::size_t v = 0; v < n; ++v) members[slot_of[v]].push_back(v);
        // Cartesian product of ordered partitions of each gap's members.
        std::vector<Block> blocks;
        std::function<void(std::size_t)> per_gap = [&](std::size_t gap) {
            if (gap > k) {
                out.emplace_back(n, params, blocks);
                return;
            }
            ordered_partitions(members[2 * gap], [&](std::vector<std::vector<std::size_t>>& parts) {
                const std::size_t mark = blocks.size();
                for (auto& p : parts) blocks.push_back({p, std::nullopt});
                if (gap < k) blocks.push_back({members[2 * gap + 1], params[gap]});
                per_gap(gap + 1);
                blocks.resize(mark);
            });
        };
        per_gap(0);
    };
    assign(0);
    return out;
}

std::vector<Atom> split(const PositiveDNF& d, std::size_t n, const ParamSet& params) {
    if (!params.includes(d.params()))
        throw std::invalid_argument("split: parameter set " + to_string(params) + " misses constants of the formula");
    if (d.max_var() > n) throw std::invalid_argument("split: formula mentions variables beyond the dimension");
    std::vector<Atom> out;
    if (d.is_false()) return out;
    for (auto& a : enumerate_atoms(n, params))
        if (d.holds(a.sample_point())) out.push_back(std::move(a));
    return out;
}

Atom chain_atom(const std::vector<ExtendedRational>& params, const std::vector<std::uint32_t>& counts) {
    if (params.size() != counts.size()) throw std::invalid_argument("chain_atom: length mismatch");
    std::vector<Rational> rational;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].is_minus_infinity()) {
            if (i + 1 != params.size()) throw std::invalid_argument("chain_atom: -inf must be the last parameter");
        } else {
            rational.push_back(params[i].value());
        }
    }
    const ParamSet ps = ParamSet::from_descending(rational);
    GapVector g = zero_gaps(ps.gap_count());
    for (std::size_t i = 0; i < counts.size(); ++i) g.counts[i] = counts[i];
    return atom_with_gaps(ps, g);
}

Atom atom_with_gaps(const ParamSet& params, const GapVector& gaps) {
    if (gaps.size() != params.gap_count()) throw std::invalid_argument("gap vector length does not match parameters");
    std::vector<Block> blocks;
    std::size_t var = 0;
    for (std::size_t gap = 0; gap < gaps.size(); ++gap) {
        for (std::uint32_t c = 0; c < gaps.counts[gap]; ++c) blocks.push_back({{var++}, std::nullopt});
        if (gap < params.size()) blocks.push_back({{}, params[gap]});
    }
    return Atom(var, params, std::move(blocks));
}

}  // namespace dlo
