#include "sinai/lattice_paths.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sinai/errors.hpp"

namespace sinai {

Walk Walk::parse(std::string_view ud) {
    std::vector<Step> steps;
    steps.reserve(ud.size());
    for (char c : ud) {
        if (c == 'U') {
            steps.push_back(Step::Up);
        } else if (c == 'D') {
            steps.push_back(Step::Down);
        } else {
            throw InvalidArgument("walk strings use only 'U' and 'D', got '" + std::string(1, c) + "'");
        }
    }
    return Walk(std::move(steps));
}

std::vector<std::int64_t> Walk::heights() const {
    std::vector<std::int64_t> h(steps_.size() + 1, 0);
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        h[k + 1] = h[k] + static_cast<std::int64_t>(steps_[k]);
    }
    return h;
}

std::vector<std::int64_t> Walk::areas() const {
    std::vector<std::int64_t> a(steps_.size() + 1, 0);
    std::int64_t height = 0;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        height += static_cast<std::int64_t>(steps_[k]);
        a[k + 1] = a[k] + height;
    }
    return a;
}

std::string Walk::to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) {
        s.push_back(st == Step::Up ? 'U' : 'D');
    }
    return s;
}

Walk Walk::rotated_left(std::size_t shift) const {
    if (steps_.empty()) {
        return *this;
    }
    std::vector<Step> out(steps_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % steps_.size()), out.end());
    return Walk(std::move(out));
}

Walk concatenate(std::span<const Walk> parts) {
    std::vector<Step> steps;
    for (const Walk& p : parts) {
        steps.insert(steps.end(), p.steps().begin(), p.steps().end());
    }
    return Walk(std::move(steps));
}

DownTimeSet::DownTimeSet(std::vector<int> times, int length) : times_(std::move(times)), length_(length) {
    if (length_ < 0) {
        throw InvalidArgument("walk length must be non-negative");
    }
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (times_[i] < 0 || times_[i] >= length_) {
            throw InvalidArgument("down time " + std::to_string(times_[i]) + " outside [0, " +
                                  std::to_string(length_ - 1) + "]");
        }
        if (i > 0 && times_[i] <= times_[i - 1]) {
            throw InvalidArgument("down times must be strictly increasing");
        }
    }
}

DownTimeSet DownTimeSet::parse(std::string_view csv, int length) {
    std::vector<int> times;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = csv.size();
        }
        std::string_view field = csv.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
            throw InvalidArgument("bad down-time field '" + std::string(field) + "'");
        }
        times.push_back(value);
        pos = comma + 1;
        if (comma == csv.size() - 1) {
            throw InvalidArgument("trailing comma in down-time list");
        }
    }
    return DownTimeSet(std::move(times), length);
}

std::int64_t DownTimeSet::sum() const {
    return std::accumulate(times_.begin(), times_.end(), std::int64_t{0});
}

std::string DownTimeSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (i > 0) {
            s.push_back(',');
        }
        s += std::to_string(times_[i]);
    }
    return s;
}

ExcursionClass::Kind ExcursionClass::kind() const {
    if (irreducible) return Kind::IrreducibleSinaiExcursion;
    if (sinai_excursion) return Kind::SinaiExcursion;
    if (sinai_walk) return Kind::SinaiWalk;
    if (bridge) return Kind::Bridge;
    return Kind::General;
}

std::string_view to_string(ExcursionClass::Kind kind) {
    switch (kind) {
        case ExcursionClass::Kind::General: return "general";
        case ExcursionClass::Kind::Bridge: return "bridge";
        case ExcursionClass::Kind::SinaiWalk: return "sinai_walk";
        case ExcursionClass::Kind::SinaiExcursion: return "sinai_excursion";
        case ExcursionClass::Kind::IrreducibleSinaiExcursion: return "irreducible_sinai_excursion";
    }
    return "general";
}

ExcursionClass classify(const Walk& w) {
    ExcursionClass c;
    const std::size_t len = w.length();
    std::int64_t height = 0;
    std::int64_t area = 0;
    bool nonnegative = true;
    bool interior_renewal = false;
    for (std::size_t k = 0; k < len; ++k) {
        height += static_cast<std::int64_t>(w[k]);
        area += height;
        if (area < 0) {
            nonnegative = false;
        }
        if (k + 1 < len && height == 0 && area == 0) {
            interior_renewal = true;
        }
    }
    c.bridge = height == 0;
    c.sinai_walk = nonnegative;
    c.sinai_excursion = c.bridge && c.sinai_walk && area == 0 && len % 4 == 0;
    c.irreducible = c.sinai_excursion && len > 0 && !interior_renewal;
    return c;
}

DownTimeSet down_times(const Walk& w) {
    std::vector<int> times;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (w[k] == Step::Down) {
            times.push_back(static_cast<int>(k));
        }
    }
    return DownTimeSet(std::move(times), static_cast<int>(w.length()));
}

Walk walk_from_down_times(const DownTimeSet& t) {
    std::vector<Step> steps(static_cast<std::size_t>(t.length()), Step::Up);
    for (int k : t.times()) {
        steps[static_cast<std::size_t>(k)] = Step::Down;
    }
    return Walk(std::move(steps));
}

std::int64_t area_from_down_times(const DownTimeSet& t) {
    const int len = t.length();
    if (len % 4 != 0) {
        throw InvalidArgument("area_from_down_times needs a length divisible by 4");
    }
    if (t.size() * 2 != static_cast<std::size_t>(len)) {
        throw InvalidArgument("area_from_down_times needs exactly L/2 down times (a bridge)");
    }
    const std::int64_t n = len / 4;
    return -2 * n * (4 * n - 1) + 2 * t.sum();
}

Walk standard_excursion(int n) {
    if (n < 0) {
        throw InvalidArgument("standard_excursion needs n >= 0");
    }
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < n; ++i) {
        steps.insert(steps.end(), {Step::Up, Step::Down, Step::Down, Step::Up});
    }
    return Walk(std::move(steps));
}

bool is_majorized(const DownTimeSet& x, const DownTimeSet& y) {
    if (x.size() != y.size()) {
        throw InvalidArgument("is_majorized needs sequences of equal length");
    }
    std::int64_t sx = 0;
    std::int64_t sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x.times()[i];
        sy += y.times()[i];
        if (sx < sy) {
            return false;
        }
    }
    return sx == sy;
}

std::vector<std::size_t> renewal_times(const Walk& w) {
    std::vector<std::size_t> out;
    std::int64_t height = 0;
    std::int64_t area = 0;
    for (std::size_t k = 0; k + 1 < w.length(); ++k) {
        height += static_cast<std::int64_t>(w[k]);
        area += height;
        if (height == 0 && area == 0) {
            out.push_back(k + 1);
        }
    }
    return out;
}

std::vector<Walk> irreducible_decomposition(const Walk& w) {
    if (!classify(w).sinai_excursion) {
        throw InvalidArgument("irreducible_decomposition needs a Sinai excursion, got " + w.to_string());
    }
    std::vector<Walk> parts;
    std::size_t start = 0;
    auto cuts = renewal_times(w);
    cuts.push_back(w.length());
    for (std::size_t cut : cuts) {
        if (cut == start) {
            continue;
        }
        auto first = w.steps().begin() + static_cast<std::ptrdiff_t>(start);
        parts.emplace_back(std::vector<Step>(first, first + static_cast<std::ptrdiff_t>(cut - start)));
        start = cut;
    }
    return parts;
}

}  // namespace sinai
