#pragma once

#include "quatrefine/orders.hpp"
#include "quatrefine/quadfield.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quatrefine {

enum class CMField { K1, K3, Ke };  // F(sqrt -1), F(sqrt -3), F(sqrt -eps)

std::string cm_field_name(CMField k);

struct CMOrderDescriptor {
    CMField field = CMField::K1;
    IdealF conductor;
    int w = 1;
    int hasse_Q = 1;
    FElem gen_t, gen_n;  // minimal polynomial x^2 - t x + n of the distinguished unit
    Int h_B;
    Int h_K;
    std::string name;
    CMEmbeddingSpec spec;
};

// Artin symbol (K/P) for K = F(sqrt -m): +1 split, -1 inert, 0 ramified.
int cm_artin_symbol(CMField k, const FundUnitData& fu, const PrimeIdealF& P);
// Eichler symbol: 1 when P divides the conductor, else the Artin symbol.
int eichler_symbol(const CMOrderDescriptor& B, const FundUnitData& fu, const PrimeIdealF& P);

// The finite set of CM O_F-orders B with w(B) > 1 (d >= 6).
std::vector<CMOrderDescriptor> enumerate_B(const FundUnitData& fu);

Int class_number_K(CMField k, const FundUnitData& fu);
// Conductor formula for h(B).
Int class_number_B(CMField k, const IdealF& conductor, int w_B, int w_OK, const FundUnitData& fu);

// Square-free r, s with r s in {d, 4d} and r eps, s eps squares.
std::pair<Int, Int> r_s_pair(const FundUnitData& fu);

std::string cmorders_json(const FundUnitData& fu, const std::vector<CMOrderDescriptor>& Bs);

}  // namespace quatrefine
