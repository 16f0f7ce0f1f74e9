#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/report.hpp"
#include "z3qg/tensor.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace z3qg {

enum class MorphismMode {
    homomorphism,
    anti_homomorphism,          // f(xy) = f(y) f(x)
    braided_anti_homomorphism,  // f(xy) = q^(t(x) t(y)) f(y) f(x)
};

enum class CoefficientTwist { identity, conjugation };

// Operations a morphism needs from its codomain.
template <class E>
struct TargetAlgebra {
    std::string name;
    E one;
    std::function<E(const E&, const E&)> mul;
    std::function<bool(const E&)> is_zero;
    std::function<std::string(const E&)> render;
    std::function<std::optional<int>(const E&)> grade;
};

TargetAlgebra<Poly> poly_target(PresentationPtr p);
TargetAlgebra<TensorPoly> tensor_target(TensorSpacePtr space);
TargetAlgebra<CycScalar> scalar_target();

// A map from a presented algebra, fixed by generator images and extended
// multiplicatively (or anti-multiplicatively) and (conjugate-)linearly.
// Evaluation works on words, so it is meaningful on any relation element;
// whether the map is well defined is what check_preserves_relations decides.
template <class E>
class GradedMorphism {
public:
    GradedMorphism(std::string name, PresentationPtr source, TargetAlgebra<E> target, std::map<Letter, E> images,
                   MorphismMode mode = MorphismMode::homomorphism,
                   CoefficientTwist twist = CoefficientTwist::identity)
        : name_(std::move(name)),
          source_(std::move(source)),
          target_(std::move(target)),
          images_(std::move(images)),
          mode_(mode),
          twist_(twist) {}

    const std::string& name() const { return name_; }
    const PresentationPtr& source() const { return source_; }
    const TargetAlgebra<E>& target() const { return target_; }
    MorphismMode mode() const { return mode_; }
    CoefficientTwist twist() const { return twist_; }

    const E& image(Letter l) const {
        auto it = images_.find(l);
        if (it == images_.end()) {
            std::string g = l.gen >= 0 && l.gen < static_cast<int>(source_->generators().size())
                                ? source_->render_letters({l})
                                : std::to_string(l.gen);
            throw std::invalid_argument(name_ + ": no image for generator " + g);
        }
        return it->second;
    }
    const E& image(const std::string& gen, int sign = 1) const { return image(Letter{source_->index(gen), sign}); }

    E apply_word(const std::vector<Letter>& w) const {
        E acc = target_.one;
        if (mode_ == MorphismMode::homomorphism) {
            for (Letter l : w) acc = target_.mul(acc, image(l));
            return acc;
        }
        long e = 0;
        if (mode_ == MorphismMode::braided_anti_homomorphism) {
            long seen = 0;
            for (Letter l : w) {
                int g = source_->grade(l);
                e += seen * g;
                seen += g;
            }
        }
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = target_.mul(acc, image(*it));
        return acc * q_power(e);
    }

    E apply(const Poly& x) const {
        E acc = target_.one * CycScalar(0);
        for (const auto& [m, c] : x.terms()) {
            CycScalar k = twist_ == CoefficientTwist::conjugation ? c.conj() : c;
            acc += apply_word(m.letters()) * k;
        }
        return acc;
    }

    CheckReport check_preserves_relations(const std::string& check_name = {}) const {
        CheckReport rep(check_name.empty() ? name_ + "-relations" : check_name);
        size_t n = 0;
        for (const Relation& r : source_->relations()) {
            // g g^-1 = 1 cancels in the word algebra; it is checked on the images below.
            if (r.element.is_zero()) continue;
            E v = apply(r.element);
            rep.expect_zero(r.label, target_.is_zero(v), target_.render(v));
            ++n;
        }
        const auto& gens = source_->generators();
        for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
            if (!gens[i].invertible) continue;
            const E& x = image(Letter{i, 1});
            const E& y = image(Letter{i, -1});
            for (int side = 0; side < 2; ++side) {
                E v = side ? target_.mul(y, x) : target_.mul(x, y);
                v += target_.one * CycScalar(-1);
                std::string label = side ? gens[i].name + "^-1*" + gens[i].name : gens[i].name + "*" + gens[i].name + "^-1";
                rep.expect_zero(label + " = 1", target_.is_zero(v), target_.render(v));
                ++n;
            }
        }
        rep.note(std::to_string(n) + " relations checked");
        return rep;
    }

    // Each generator image is homogeneous of the generator's grade.
    CheckReport check_image_grades() const {
        CheckReport rep(name_ + "-grades");
        if (!target_.grade) return rep;
        for (const auto& [l, img] : images_) {
            auto g = target_.grade(img);
            if (target_.is_zero(img)) continue;
            if (!g || *g != source_->grade(l))
                rep.fail(source_->render_letters({l}) + " has image of grade " + (g ? std::to_string(*g) : "mixed"));
        }
        return rep;
    }

private:
    std::string name_;
    PresentationPtr source_;
    TargetAlgebra<E> target_;
    std::map<Letter, E> images_;
    MorphismMode mode_;
    CoefficientTwist twist_;
};

}  // namespace z3qg
