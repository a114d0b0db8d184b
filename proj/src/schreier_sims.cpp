#include "golay486/permaction.hpp"

#include <random>

namespace golay486::permaction {

namespace {

using Level = StabilizerChain::Level;

constexpr int kConsecutiveSifts = 32;

void rebuild_orbit(Level& level, std::size_t degree) {
    level.transversal_index.assign(degree, -1);
    level.transversal.clear();
    level.orbit.clear();
    level.transversal_index[level.base_point] = 0;
    level.transversal.push_back(Permutation::identity(degree));
    level.orbit.push_back(level.base_point);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
        const Point x = level.orbit[head];
        for (const auto& s : level.strong_generators) {
            const Point y = s(x);
            if (level.transversal_index[y] >= 0) continue;
            level.transversal_index[y] = static_cast<std::int32_t>(level.transversal.size());
            level.transversal.push_back(compose(level.transversal[static_cast<std::size_t>(head)], s));
            level.orbit.push_back(y);
        }
    }
}

Point first_moved_point(const Permutation& p) {
    for (Point x = 0; x < p.degree(); ++x) {
        if (p(x) != x) return x;
    }
    return 0;
}

struct Residue {
    Permutation element;
    std::size_t level;
};

// Strips g through levels [from, end). The residue fixes the base points of the
// levels it passed; it is trivial iff g was in the group described by them.
Residue sift(const std::vector<Level>& levels, Permutation g, std::size_t from) {
    for (std::size_t i = from; i < levels.size(); ++i) {
        const Point x = g(levels[i].base_point);
        const auto idx = levels[i].transversal_index[x];
        if (idx < 0) return {std::move(g), i};
        g = compose(g, inverse(levels[i].transversal[static_cast<std::size_t>(idx)]));
    }
    return {std::move(g), levels.size()};
}

// Adds a nontrivial residue that fixes the base points of levels [0, level).
void absorb(std::vector<Level>& levels, Residue r, std::size_t degree) {
    if (r.level == levels.size()) {
        Level fresh;
        fresh.base_point = first_moved_point(r.element);
        levels.push_back(std::move(fresh));
    }
    for (std::size_t i = 0; i <= r.level; ++i) {
        levels[i].strong_generators.push_back(r.element);
        rebuild_orbit(levels[i], degree);
    }
}

// Product replacement over a working copy of the generators.
class RandomElements {
public:
    RandomElements(const std::vector<Permutation>& generators, std::size_t degree, std::uint64_t seed)
        : rng_(seed), accumulator_(Permutation::identity(degree)) {
        pool_ = generators;
        while (pool_.size() < 10) pool_.push_back(generators[pool_.size() % generators.size()]);
        for (int i = 0; i < 50; ++i) next();
    }

    Permutation next() {
        std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
        const std::size_t i = pick(rng_);
        std::size_t j = pick(rng_);
        while (j == i) j = pick(rng_);
        pool_[i] = (rng_() & 1U) ? compose(pool_[i], pool_[j]) : compose(pool_[i], inverse(pool_[j]));
        accumulator_ = compose(accumulator_, pool_[i]);
        return accumulator_;
    }

private:
    std::mt19937_64 rng_;
    std::vector<Permutation> pool_;
    Permutation accumulator_;
};

}  // namespace

std::vector<Point> StabilizerChain::base() const {
    std::vector<Point> out;
    for (const auto& l : levels_) out.push_back(l.base_point);
    return out;
}

BigInt StabilizerChain::order() const {
    BigInt order = 1;
    for (const auto& l : levels_) order *= l.orbit.size();
    return order;
}

bool StabilizerChain::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    const auto r = sift(levels_, p, 0);
    return r.level == levels_.size() && r.element.is_identity();
}

StabilizerChain schreier_sims(const GroupAction& action, std::uint64_t seed) {
    const std::size_t n = action.degree();
    StabilizerChain chain;
    chain.degree_ = n;
    auto& levels = chain.levels_;

    std::vector<Permutation> generators;
    for (const auto& g : action.generators()) {
        if (!g.is_identity()) generators.push_back(g);
    }
    if (generators.empty()) return chain;

    for (const auto& g : generators) {
        auto r = sift(levels, g, 0);
        if (!r.element.is_identity()) absorb(levels, std::move(r), n);
    }

    // Random phase: stop after a run of random elements that all sift to the identity.
    RandomElements random(generators, n, seed);
    for (int run = 0; run < kConsecutiveSifts;) {
        auto r = sift(levels, random.next(), 0);
        if (r.element.is_identity()) {
            ++run;
        } else {
            absorb(levels, std::move(r), n);
            run = 0;
        }
    }

    // Completion: at every level, all Schreier generators must sift through the levels
    // below. Failures are absorbed and the check restarts from the bottom.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = levels.size(); !changed && i-- > 0;) {
            const Level& level = levels[i];
            for (std::size_t t = 0; !changed && t < level.orbit.size(); ++t) {
                for (std::size_t s = 0; !changed && s < level.strong_generators.size(); ++s) {
                    const Permutation& gen = level.strong_generators[s];
                    const Point image = gen(level.orbit[t]);
                    const auto& back = level.transversal[static_cast<std::size_t>(level.transversal_index[image])];
                    Permutation schreier = compose(compose(level.transversal[t], gen), inverse(back));
                    auto r = sift(levels, std::move(schreier), i + 1);
                    if (!r.element.is_identity()) {
                        absorb(levels, std::move(r), n);
                        changed = true;
                    }
                }
            }
        }
    }
    return chain;
}

BigInt group_order(const GroupAction& action, std::uint64_t seed) { return schreier_sims(action, seed).order(); }

}  // namespace golay486::permaction
