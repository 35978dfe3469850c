// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_LITERALS_HPP
#define QINV_LITERALS_HPP

#include <string>

#include "qinv/motive.hpp"
#include "qinv/ncmot.hpp"

namespace qinv {

/// Text grammars used by the CLI (round-trip stable):
///   field:      Q | R | Qp:5 | Q2
///   form:       diag:1,-1,-1,ep@Qp:5
///   place:      3 | inf | 3.1  (slot above a split rational place)
///   class:      ram{3,inf}@Q | quat(-1,-3)@Q | ram{5}@sqrt(ep)/Qp:5
///   etale:      split@Qp:5 | sqrt(ep)@Qp:5
///   motive:     U(ram{3,inf})@Q | U(ram{5};ind=2)@sqrt(e)/Qp:5
///   pair:       pair{quat(-1,-1),quat(1,1)}@R
///   involution: iv:deg=4;A=ram{};delta=1;C0=split:{ram{},ram{}};sgn=0;star=1@R
FieldDescriptor parse_field(const std::string& text, i64 epsilon_override = 0);
SquareClass parse_value_token(const FieldDescriptor& field, const std::string& token);
QuadraticForm parse_form(const std::string& text, i64 epsilon_override = 0);
Place parse_place(const std::string& text);
EtaleQuadratic parse_etale(const std::string& text, i64 epsilon_override = 0);
BrauerClass2 parse_class(const std::string& text, i64 epsilon_override = 0);
MotiveObject parse_motive(const std::string& text, i64 epsilon_override = 0);
std::pair<BrauerClass2, BrauerClass2> parse_quaternion_pair(const std::string& text,
                                                            i64 epsilon_override = 0);
InvolutionDescriptor parse_involution(const std::string& text, i64 epsilon_override = 0);

std::string class_literal(const BrauerClass2& cls);
std::string motive_literal(const MotiveObject& m);

}  // namespace qinv

#endif
