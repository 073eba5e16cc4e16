#include "eqcohom/rotation.hpp"

#include <bit>
#include <sstream>

namespace eqcohom {

AdmissibleSequence AdmissibleSequence::from_indices(const std::vector<int>& indices)
{
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const int i = indices[k];
        if (i < 1 || i > 32)
            throw std::invalid_argument("admissible sequence index out of range: " + std::to_string(i));
        if (k > 0 && indices[k - 1] <= i)
            throw std::invalid_argument("admissible sequence must be strictly decreasing");
        mask |= std::uint32_t{1} << (i - 1);
    }
    return AdmissibleSequence(mask);
}

int AdmissibleSequence::size() const { return std::popcount(mask_); }

int AdmissibleSequence::max_index() const { return 32 - std::countl_zero(mask_); }

std::vector<int> AdmissibleSequence::indices() const
{
    std::vector<int> out;
    for (int i = 32; i >= 1; --i)
        if (contains(i))
            out.push_back(i);
    return out;
}

BiDegree AdmissibleSequence::degree() const
{
    BiDegree d{};
    for (int i : indices())
        d += generator_degree(i);
    return d;
}

std::string to_string(const AdmissibleSequence& s)
{
    if (s.empty())
        return "B[0]";
    std::string out = "B[";
    bool first = true;
    for (int i : s.indices()) {
        if (!first)
            out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "]";
}

std::string to_string(const RotElement& x)
{
    return format_element(
        x, [](const AdmissibleSequence& s) { return to_string(s); },
        [](const AdmissibleSequence& s) { return s.empty(); });
}

namespace {

void require_p(int p)
{
    if (p < 2)
        throw std::invalid_argument("SO(p, floor(p/2)) needs p >= 2, got " + std::to_string(p));
    if (p > 31)
        throw std::invalid_argument("SO(p, floor(p/2)) supports p <= 31, got " + std::to_string(p));
}

}  // namespace

std::vector<AdmissibleSequence> admissible_sequences(int p)
{
    require_p(p);
    const std::uint32_t count = std::uint32_t{1} << (p - 1);
    std::vector<AdmissibleSequence> out;
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask)
        out.push_back(AdmissibleSequence::from_mask(mask));
    return out;
}

FreeModule so_generators(int p)
{
    std::vector<Generator> gens;
    for (const auto& s : admissible_sequences(p))
        gens.push_back({to_string(s), s.degree()});
    return FreeModule(std::move(gens));
}

int exponent_bound(int i, int p)
{
    if (i < 2 || i >= p)
        throw std::out_of_range("exponent_bound needs 2 <= i < p, got i=" + std::to_string(i) +
                                ", p=" + std::to_string(p));
    int n = 1;
    while (i * n < p)
        n *= 2;
    return n;
}

RotationAlgebra::RotationAlgebra(int p) : p_(p)
{
    require_p(p);
    factors_ = TensorFactors::descending(p - 1);
    basis_ = admissible_sequences(p);
}

RotElement RotationAlgebra::generator(int i) const
{
    if (i < 1 || i >= p_)
        throw std::out_of_range("B" + std::to_string(i) + " is not a generator of H(SO(" + std::to_string(p_) +
                                "," + std::to_string(q()) + "))");
    return RotElement(AdmissibleSequence::single(i));
}

RotElement RotationAlgebra::basis_element(AdmissibleSequence s) const
{
    if (!s.valid_for(p_))
        throw std::out_of_range(to_string(s) + " is not admissible for p=" + std::to_string(p_));
    return RotElement(s);
}

void RotationAlgebra::check_element(const RotElement& x) const
{
    for (const auto& [s, c] : x)
        if (!s.valid_for(p_))
            throw std::invalid_argument(to_string(s) + " is not admissible for p=" + std::to_string(p_));
}

TensorElement RotationAlgebra::omega_generator(int i) const
{
    if (i < 1 || i >= p_)
        throw std::out_of_range("omega_generator: index out of range");
    TensorElement out;
    const ProjMonomial top{static_cast<std::uint8_t>(i % 2), static_cast<std::uint16_t>(i / 2)};
    for (int j = i; j <= p_ - 1; ++j) {
        const std::size_t k = *factors_.position_of(j);
        if (factors_[k].admits(top.eps, top.j))
            out.add(tensor_single(factors_, k, top), CoeffElement::one());
    }
    return out;
}

void RotationAlgebra::ensure_images() const
{
    std::call_once(images_once_, [this] {
        std::vector<TensorElement> gens(static_cast<std::size_t>(p_));
        for (int i = 1; i < p_; ++i)
            gens[static_cast<std::size_t>(i)] = omega_generator(i);
        // Increasing masks: dropping the top index gives an earlier entry.
        for (const auto& s : basis_) {
            if (s.empty()) {
                images_.emplace(s, TensorElement(tensor_unit(factors_)));
            } else {
                const int top = s.max_index();
                const auto rest = AdmissibleSequence::from_mask(s.mask() & ~(std::uint32_t{1} << (top - 1)));
                images_.emplace(s, tensor_mul(factors_, images_.at(rest), gens[static_cast<std::size_t>(top)]));
            }
            image_degrees_.emplace(s, s.degree());
        }
    });
}

const TensorElement& RotationAlgebra::omega_basis(AdmissibleSequence s) const
{
    if (!s.valid_for(p_))
        throw std::out_of_range(to_string(s) + " is not admissible for p=" + std::to_string(p_));
    ensure_images();
    return images_.at(s);
}

TensorElement RotationAlgebra::omega_star(const RotElement& x) const
{
    check_element(x);
    TensorElement out;
    for (const auto& [s, c] : x)
        out += c * omega_basis(s);
    return out;
}

std::optional<RotElement> RotationAlgebra::pull_back(const TensorElement& x) const
{
    check_factors(factors_, x);
    ensure_images();

    std::map<BiDegree, TensorElement> components;
    for (const auto& [t, c] : x)
        for (const auto& m : c.terms())
            components[m.degree() + t.degree()].add(t, m);

    RotElement out;
    for (const auto& [d, target] : components) {
        std::vector<AdmissibleSequence> used;
        std::vector<const TensorElement*> cols;
        for (const auto& s : basis_)
            if (dim_at(d - image_degrees_.at(s))) {
                used.push_back(s);
                cols.push_back(&images_.at(s));
            }
        auto coords = expand_in_basis(factors_, std::span<const TensorElement* const>(cols), target, d);
        if (!coords)
            return std::nullopt;
        for (std::size_t k = 0; k < used.size(); ++k)
            out.add(used[k], (*coords)[k]);
    }
    return out;
}

const RotElement& RotationAlgebra::generator_product(AdmissibleSequence s, int i) const
{
    const auto key = std::make_pair(s, i);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = generator_table_.find(key); it != generator_table_.end())
            return *it->second;
    }
    const TensorElement product = tensor_mul(factors_, omega_basis(s), omega_basis(AdmissibleSequence::single(i)));
    auto pre = pull_back(product);
    if (!pre)
        throw InconsistencyError("omega^*(" + to_string(s) + " * B" + std::to_string(i) + ") = " +
                                 to_string(factors_, product) + " is not in the image of omega^* for p=" +
                                 std::to_string(p_));
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = generator_table_.try_emplace(key, std::make_unique<RotElement>(std::move(*pre)));
    return *it->second;
}

RotElement RotationAlgebra::times_generator(const RotElement& x, int i) const
{
    RotElement out;
    for (const auto& [s, c] : x)
        out += c * generator_product(s, i);
    return out;
}

const RotElement& RotationAlgebra::basis_product(AdmissibleSequence s, AdmissibleSequence t) const
{
    if (t < s)
        std::swap(s, t);
    const auto key = std::make_pair(s, t);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = pair_table_.find(key); it != pair_table_.end())
            return *it->second;
    }
    RotElement acc = basis_element(s);
    for (int i : t.indices())
        acc = times_generator(acc, i);
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = pair_table_.try_emplace(key, std::make_unique<RotElement>(std::move(acc)));
    return *it->second;
}

RotElement RotationAlgebra::mul(const RotElement& x, const RotElement& y) const
{
    check_element(x);
    check_element(y);
    RotElement out;
    for (const auto& [s, c] : x)
        for (const auto& [t, d] : y) {
            const CoeffElement cd = c * d;
            if (!cd.is_zero())
                out += cd * basis_product(s, t);
        }
    return out;
}

RotElement RotationAlgebra::mul_direct(const RotElement& x, const RotElement& y) const
{
    const TensorElement product = tensor_mul(factors_, omega_star(x), omega_star(y));
    auto pre = pull_back(product);
    if (!pre)
        throw InconsistencyError("omega^*(x) * omega^*(y) = " + to_string(factors_, product) +
                                 " is not in the image of omega^* for p=" + std::to_string(p_));
    return *pre;
}

const RotationAlgebra& rotation_algebra(int p)
{
    require_p(p);
    static std::mutex registry_mutex;
    static std::map<int, std::unique_ptr<RotationAlgebra>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[p];
    if (!slot)
        slot = std::make_unique<RotationAlgebra>(p);
    return *slot;
}

RotElement so_mul(int p, const RotElement& x, const RotElement& y) { return rotation_algebra(p).mul(x, y); }

TensorElement omega_star(int p, const RotElement& x) { return rotation_algebra(p).omega_star(x); }

bool PresentationReport::all_match() const
{
    for (const auto& r : relations)
        if (!r.match)
            return false;
    return true;
}

std::string PresentationReport::to_text() const
{
    std::ostringstream os;
    os << "SO(" << p << "," << p / 2 << ") presentation audit\n";
    for (const auto& r : relations) {
        os << "  " << r.lhs << ": claimed " << to_string(r.claimed) << "; oracle " << to_string(r.oracle) << "; "
           << (r.match ? "match" : "MISMATCH") << '\n';
    }
    os << (all_match() ? "all relations match\n" : "presentation differs from the oracle\n");
    return os.str();
}

PresentationReport check_presentation(int p, int max_p)
{
    if (p < 2 || p > max_p)
        throw std::out_of_range("check_presentation: p must lie in [2, " + std::to_string(max_p) + "], got " +
                                std::to_string(p));
    const RotationAlgebra& alg = rotation_algebra(p);
    auto gen_or_zero = [&](int k) { return k < p ? alg.generator(k) : RotElement{}; };
    auto power = [&](int i, int n) {
        RotElement acc = RotElement(AdmissibleSequence{});
        for (int k = 0; k < n; ++k)
            acc = alg.mul(acc, alg.generator(i));
        return acc;
    };

    PresentationReport report;
    report.p = p;
    auto record = [&](std::string lhs, RotElement claimed, RotElement oracle) {
        const bool match = claimed == oracle;
        report.relations.push_back({std::move(lhs), std::move(claimed), std::move(oracle), match});
    };

    record("B1^2", ConeMonomial::rho() * alg.generator(1) + ConeMonomial::tau() * gen_or_zero(2), power(1, 2));
    for (int i = 2; i < p; ++i)
        record("B" + std::to_string(i) + "^2", gen_or_zero(2 * i), power(i, 2));
    for (int i = 2; i < p; ++i) {
        if (i != 2 && i % 2 == 0)
            continue;
        const int n = exponent_bound(i, p);
        if (n == 2)
            continue;  // same relation as the square above
        record("B" + std::to_string(i) + "^" + std::to_string(n), RotElement{}, power(i, n));
    }
    return report;
}

}  // namespace eqcohom
