#include <doctest.h>

#include "tensorideals/projection.hpp"
#include "tensorideals/symtensor.hpp"
#include "tensorideals/weak_generic.hpp"

using namespace tid;

namespace {

Hypermatrix as_hypermatrix(const FormMatrix& m) {
  Hypermatrix h(m.registry(), {m.rows(), m.cols()});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) h.set({r + 1, c + 1}, m.at(r, c));
  }
  return h;
}

}  // namespace

TEST_CASE("generic hypermatrices are weak generic") {
  for (const auto& shape :
       std::vector<std::vector<std::size_t>>{{3, 3}, {2, 3}, {2, 2, 2}}) {
    Hypermatrix a = Hypermatrix::generic(shape);
    WeakGenericReport rep = classify_weak_generic(a);
    CHECK(rep.variable_entries);
    CHECK(rep.unique_entry_exists);
    CHECK(rep.sections_recognized);
    CHECK(rep.all());
    CHECK(classify_structure(a) == StructureClass::Generic);
  }
}

TEST_CASE("generic symmetric hypermatrices are weak generic with symmetric sections") {
  Hypermatrix a = generic_sym_hypermatrix(SymProfile{{2}, {3}});
  CHECK(classify_structure(a) == StructureClass::SymmetricPattern);
  WeakGenericReport rep = classify_weak_generic(a);
  CHECK(rep.all());
  for (const auto& s : rep.sections) {
    CHECK(s.cls == StructureClass::SymmetricPattern);  // 2x2 symmetric patterns
  }

  Hypermatrix b = generic_sym_hypermatrix(SymProfile{{2, 2}, {1, 2}});
  WeakGenericReport repb = classify_weak_generic(b);
  CHECK(repb.all());
  // sections along the first (degree-1) factor stay symmetric in the second
  // block; sections along the symmetrized axes are generic matrices
  for (const auto& s : repb.sections) {
    if (s.axis == 1) {
      CHECK(s.cls == StructureClass::SymmetricPattern);
    } else {
      CHECK(s.cls == StructureClass::Generic);
    }
  }
}

TEST_CASE("catalecticant pattern recognition") {
  // The 3 x 3 catalecticant of the quadratic Veronese surface coincides with
  // the generic symmetric matrix; the symmetric pattern matches first.
  FormMatrix c = catalecticant_matrix(2, 2);
  CHECK(classify_structure(as_hypermatrix(c)) == StructureClass::SymmetricPattern);
  // A wider catalecticant (3 x 6, weight 3) is not symmetric.
  FormMatrix c36 = catalecticant_matrix(2, 3);
  REQUIRE(c36.rows() == 3);
  REQUIRE(c36.cols() == 6);
  CHECK(classify_structure(as_hypermatrix(c36)) == StructureClass::Catalecticant);
  // Hankel 2 x 3 of the rational normal cubic, and its transpose
  FormMatrix h = catalecticant_matrix(1, 3);
  CHECK(classify_structure(as_hypermatrix(h)) == StructureClass::Catalecticant);
  CHECK(classify_structure(as_hypermatrix(h.transpose())) == StructureClass::Catalecticant);
}

TEST_CASE("the projection hypermatrix is weak generic") {
  for (ProjectionProfile profile : {ProjectionProfile{2, 4, 2, 0}, ProjectionProfile{2, 6, 2, 1}}) {
    Projection model(profile);
    Hypermatrix a = model.build_A();
    WeakGenericReport rep = classify_weak_generic(a);
    CHECK(rep.variable_entries);
    CHECK(rep.unique_entry_exists);
    CHECK(rep.sections_recognized);
    for (const auto& s : rep.sections) {
      if (s.axis == 3 && profile.d - profile.t >= 4) {
        // axis-3 sections carry the catalecticant pattern when it has >= 2 columns
        CHECK(s.cls == StructureClass::Catalecticant);
      }
      if (s.axis <= 2) {
        bool generic_like =
            s.cls == StructureClass::Generic || s.cls == StructureClass::NoTwoMinors;
        CHECK(generic_like);
      }
    }
  }
}

TEST_CASE("non-variable entries are rejected") {
  auto reg = VarRegistry::make({"x", "y"});
  Hypermatrix a(reg, {2});
  a.set({1}, Polynomial::variable(reg, 0) + Polynomial::variable(reg, 1));
  a.set({2}, Polynomial::variable(reg, 1));
  CHECK_THROWS_AS(classify_weak_generic(a), NotVariableEntries);
  CHECK(classify_structure(a) == StructureClass::Unrecognized);
}

TEST_CASE("missing unique entry is reported") {
  auto reg = VarRegistry::make({"a", "b"});
  Hypermatrix m(reg, {2, 2});
  m.set({1, 1}, Polynomial::variable(reg, 0));
  m.set({2, 2}, Polynomial::variable(reg, 0));
  m.set({1, 2}, Polynomial::variable(reg, 1));
  m.set({2, 1}, Polynomial::variable(reg, 1));
  WeakGenericReport rep = classify_weak_generic(m);
  CHECK(rep.variable_entries);
  CHECK(!rep.unique_entry_exists);
  CHECK(!rep.all());
}

TEST_CASE("unrecognized structure stays unrecognized") {
  // 2x3 with an arbitrary repetition pattern that matches no known class
  auto reg = VarRegistry::make({"a", "b", "c", "d"});
  Hypermatrix m(reg, {2, 3});
  m.set({1, 1}, Polynomial::variable(reg, 0));
  m.set({1, 2}, Polynomial::variable(reg, 1));
  m.set({1, 3}, Polynomial::variable(reg, 2));
  m.set({2, 1}, Polynomial::variable(reg, 1));
  m.set({2, 2}, Polynomial::variable(reg, 0));
  m.set({2, 3}, Polynomial::variable(reg, 3));
  CHECK(classify_structure(m) == StructureClass::Unrecognized);
}
