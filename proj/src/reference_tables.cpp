#include "hyperinv/reference_tables.hpp"

#include <stdexcept>

namespace hyperinv::reference {

namespace {

using Sq = std::vector<int>;

std::vector<ExpansionTable> make_expansion_tables() {
  std::vector<ExpansionTable> out;

  // ---- rank 2 ----
  out.push_back({2, 2,
                 {{2, {2, 0, 0, 2}, 1}, {2, {1, 1, 1, 1}, -1}},
                 {},
                 {}});
  out.push_back({2, 3,
                 {{3, {2, 0, 0, 0, 2, 0, 0, 0, 2}, 1},
                  {3, {2, 0, 0, 0, 1, 1, 0, 1, 1}, -3},
                  {3, {1, 1, 0, 0, 1, 1, 1, 0, 1}, 2}},
                 {},
                 {}});
  out.push_back({2, 4,
                 {{4, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}, 1},
                  {4, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1}, -6},
                  {4, {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1}, 3},
                  {4, {2, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1}, 8},
                  {4, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1}, -6}},
                 {},
                 {}});

  // ---- rank 3 ----
  out.push_back({3, 2,
                 {{2, {3, 0, 0, 3}, 1}, {2, {2, 1, 1, 2}, -1}},
                 {},
                 {}});
  out.push_back({3, 3,
                 {{3, {3, 0, 0, 0, 3, 0, 0, 0, 3}, 1},
                  {3, {3, 0, 0, 0, 2, 1, 0, 1, 2}, -3},
                  {3, {2, 1, 0, 0, 2, 1, 1, 0, 2}, 6},
                  {3, {2, 1, 0, 1, 1, 1, 0, 1, 2}, -6},
                  {3, {1, 1, 1, 1, 1, 1, 1, 1, 1}, 2}},
                 {},
                 {}});
  out.push_back(
      {3, 4,
       {{4, {3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3}, 1},
        {4, {3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 2, 1, 0, 0, 1, 2}, -6},
        {4, {3, 0, 0, 0, 0, 2, 1, 0, 0, 0, 2, 1, 0, 1, 0, 2}, 24},
        {4, {3, 0, 0, 0, 0, 2, 1, 0, 0, 1, 1, 1, 0, 0, 1, 2}, -24},
        {4, {3, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1}, 8},
        {4, {2, 1, 0, 0, 0, 2, 1, 0, 0, 0, 2, 1, 1, 0, 0, 2}, -6},
        {4, {2, 1, 0, 0, 1, 2, 0, 0, 0, 0, 2, 1, 0, 0, 1, 2}, 3},
        {4, {2, 0, 0, 1, 0, 2, 0, 1, 1, 0, 2, 0, 0, 1, 1, 1}, -48},
        {4, {2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 2, 1, 1, 1, 1, 0}, 24},
        {4, {2, 0, 1, 0, 0, 2, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1}, 36},
        {4, {2, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1}, -24},
        {4, {1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1}, 12}},
       {{{2, 0, 1, 0, 0, 2, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1}, 36, 48},
        {{1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1}, 12, 0}},
       {}});

  // ---- rank 4 ----
  out.push_back({4, 2,
                 {{2, {4, 0, 0, 4}, 1}, {2, {3, 1, 1, 3}, -4}, {2, {2, 2, 2, 2}, 3}},
                 {},
                 {}});
  out.push_back({4, 3,
                 {{3, {4, 0, 0, 0, 4, 0, 0, 0, 4}, 1},
                  {3, {4, 0, 0, 0, 3, 1, 0, 1, 3}, -12},
                  {3, {4, 0, 0, 0, 2, 2, 0, 2, 2}, 9},
                  {3, {3, 1, 0, 0, 3, 1, 1, 0, 3}, 8},
                  {3, {3, 1, 0, 1, 2, 1, 0, 1, 3}, 36},
                  {3, {3, 1, 0, 1, 1, 2, 0, 2, 2}, -72},
                  {3, {2, 2, 0, 0, 2, 2, 2, 0, 2}, 6},
                  {3, {0, 2, 2, 2, 1, 1, 2, 1, 1}, 36},
                  {3, {2, 1, 1, 1, 2, 1, 1, 1, 2}, -12}},
                 {},
                 {}});
  out.push_back(
      {4, 4,
       {{4, {4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4}, 1},
        {4, {4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3}, -24},
        {4, {4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2}, 18},
        {4, {4, 0, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 0, 1, 0, 3}, 32},
        {4, {4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 2, 1, 0, 0, 1, 3}, 144},
        {4, {4, 0, 0, 0, 0, 3, 0, 1, 0, 0, 2, 2, 0, 1, 2, 1}, -288},
        {4, {4, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 0, 2, 0, 2}, 24},
        {4, {4, 0, 0, 0, 0, 0, 2, 2, 0, 2, 1, 1, 0, 2, 1, 1}, 144},
        {4, {4, 0, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 0, 1, 1, 2}, -48},
        {4, {3, 1, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 1, 0, 0, 3}, -24},
        {4, {3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3}, 48},
        {4, {3, 0, 0, 1, 0, 3, 0, 1, 1, 0, 3, 0, 0, 1, 1, 2}, -288},
        {4, {3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 3, 1, 1, 1, 1, 1}, -96},
        {4, {3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2}, -72},
        {4, {3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 2, 2, 1, 1, 2, 0}, 144},
        {4, {3, 1, 0, 0, 0, 3, 0, 1, 1, 0, 2, 1, 0, 0, 2, 2}, 288},
        {4, {3, 0, 0, 1, 0, 3, 1, 0, 0, 1, 2, 1, 1, 0, 1, 2}, -432},
        {4, {3, 0, 0, 1, 0, 3, 1, 0, 1, 0, 2, 1, 0, 1, 1, 2}, 288},
        {4, {3, 0, 0, 1, 0, 3, 0, 1, 0, 1, 2, 1, 1, 0, 2, 1}, 288},
        {4, {3, 0, 0, 1, 0, 3, 1, 0, 0, 0, 2, 2, 1, 1, 1, 1}, 288},
        {4, {3, 0, 0, 1, 0, 2, 2, 0, 0, 2, 0, 2, 1, 0, 2, 1}, -288},
        {4, {3, 0, 1, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 2, 1, 1}, 864},
        {4, {3, 1, 0, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 1, 2, 1}, -576},
        {4, {3, 1, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 1, 0, 1, 2}, 144},
        {4, {3, 1, 0, 0, 1, 1, 1, 1, 0, 2, 1, 1, 0, 0, 2, 2}, -576},
        {4, {3, 1, 0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 0, 1, 1, 2}, -576},
        {4, {3, 0, 0, 1, 0, 2, 1, 1, 0, 1, 2, 1, 1, 1, 1, 1}, 288},
        {4, {2, 2, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 0, 2}, 18},
        {4, {2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2}, 27},
        {4, {2, 2, 0, 0, 2, 1, 1, 0, 0, 1, 1, 2, 0, 0, 2, 2}, -144},
        {4, {2, 1, 0, 1, 0, 2, 2, 0, 1, 0, 2, 1, 1, 1, 0, 2}, 480},
        {4, {2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 0, 2}, 288},
        {4, {2, 1, 1, 0, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 0, 2}, -504},
        {4, {2, 1, 1, 0, 1, 2, 1, 0, 1, 0, 1, 2, 0, 1, 1, 2}, -288},
        {4, {2, 1, 1, 0, 1, 2, 0, 1, 1, 1, 1, 1, 0, 0, 2, 2}, -288},
        {4, {2, 2, 0, 0, 0, 0, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}, 144},
        {4, {2, 0, 1, 1, 2, 0, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1}, 144},
        {4, {2, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 1, 1}, 528},
        {4, {2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, -144},
        {4, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 24}},
       {{{2, 1, 0, 1, 0, 2, 2, 0, 1, 0, 2, 1, 1, 1, 0, 2}, 480, -144},
        {{2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, -144, -288},
        {{2, 2, 0, 0, 2, 1, 1, 0, 0, 1, 1, 2, 0, 0, 2, 2}, -144, -432},
        {{2, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 1, 1}, 528, 576},
        {{3, 1, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 1, 0, 1, 2}, 144, 288}},
       {{{0, 0, 2, 2, 0, 2, 0, 2, 2, 1, 1, 0, 2, 1, 1, 0}, 144},
        {{0, 0, 2, 2, 0, 2, 1, 1, 2, 0, 1, 1, 2, 2, 0, 0}, 144},
        {{0, 0, 2, 2, 0, 2, 1, 1, 2, 1, 0, 1, 2, 1, 1, 0}, 576}}});

  // ---- rank 6 ----
  out.push_back({6, 2,
                 {{2, {6, 0, 0, 6}, 1},
                  {2, {5, 1, 1, 5}, -6},
                  {2, {4, 2, 2, 4}, 15},
                  {2, {3, 3, 3, 3}, -10}},
                 {},
                 {}});
  out.push_back({6, 3,
                 {{3, {6, 0, 0, 0, 6, 0, 0, 0, 6}, 1},
                  {3, {6, 0, 0, 0, 5, 1, 0, 1, 5}, -18},
                  {3, {6, 0, 0, 0, 4, 2, 0, 2, 4}, 45},
                  {3, {6, 0, 0, 0, 3, 3, 0, 3, 3}, -30},
                  {3, {5, 1, 0, 0, 5, 1, 1, 0, 5}, 12},
                  {3, {5, 0, 1, 0, 5, 1, 1, 1, 4}, 90},
                  {3, {5, 0, 1, 0, 2, 4, 1, 4, 1}, -180},
                  {3, {5, 0, 1, 0, 4, 2, 1, 2, 3}, -360},
                  {3, {5, 0, 1, 0, 3, 3, 1, 3, 2}, 360},
                  {3, {4, 2, 0, 0, 4, 2, 2, 0, 4}, 30},
                  {3, {4, 1, 1, 1, 4, 1, 1, 1, 4}, -90},
                  {3, {1, 4, 1, 4, 0, 2, 1, 2, 3}, 720},
                  {3, {4, 2, 0, 2, 2, 2, 0, 2, 4}, 270},
                  {3, {4, 0, 2, 0, 3, 3, 2, 3, 1}, -360},
                  {3, {4, 1, 1, 1, 3, 2, 1, 2, 3}, 180},
                  {3, {4, 2, 0, 1, 2, 3, 1, 2, 3}, -540},
                  {3, {4, 1, 1, 2, 2, 2, 0, 3, 3}, -540},
                  {3, {3, 3, 0, 0, 3, 3, 3, 0, 3}, 20},
                  {3, {0, 3, 3, 3, 2, 1, 3, 1, 2}, 540},
                  {3, {3, 2, 1, 1, 3, 2, 2, 1, 3}, -600},
                  {3, {3, 1, 2, 1, 3, 2, 2, 2, 2}, 540},
                  {3, {2, 2, 2, 2, 2, 2, 2, 2, 2}, -90}},
                 {},
                 {}});
  return out;
}

std::vector<ClassTable> make_class_tables() {
  std::vector<ClassTable> out;
  // r = 2 representative sets
  out.push_back({2, 1, {{2}}, 0});
  out.push_back({2, 2, {{2, 0, 0, 2}, {1, 1, 1, 1}}, 0});
  out.push_back({2, 3,
                 {{2, 0, 0, 0, 2, 0, 0, 0, 2},
                  {2, 0, 0, 0, 1, 1, 0, 1, 1},
                  {0, 1, 1, 1, 0, 1, 1, 1, 0}},
                 0});
  out.push_back({2, 4,
                 {{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2},
                  {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1},
                  {2, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0},
                  {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1},
                  {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1}},
                 0});
  // r = 4 representative sets
  out.push_back({4, 1, {{4}}, 0});
  out.push_back({4, 2, {{4, 0, 0, 4}, {3, 1, 1, 3}, {2, 2, 2, 2}}, 0});
  out.push_back({4, 3,
                 {{4, 0, 0, 0, 4, 0, 0, 0, 4},
                  {4, 0, 0, 0, 3, 1, 0, 1, 3},
                  {4, 0, 0, 0, 2, 2, 0, 2, 2},
                  {3, 1, 0, 0, 3, 1, 1, 0, 3},
                  {3, 1, 0, 1, 2, 1, 0, 1, 3},
                  {3, 0, 1, 0, 2, 2, 1, 2, 1},
                  {2, 2, 0, 0, 2, 2, 2, 0, 2},
                  {0, 2, 2, 2, 1, 1, 2, 1, 1},
                  {2, 1, 1, 1, 2, 1, 1, 1, 2}},
                 0});
  {
    ClassTable t;
    t.rank = 4;
    t.order = 4;
    t.missing_class_count = 3;
    t.squares = {
        {4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4},
        {4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3},
        {4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2},
        {4, 0, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 0, 1, 0, 3},
        {4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 2, 1, 0, 0, 1, 3},
        {4, 0, 0, 0, 0, 3, 0, 1, 0, 0, 2, 2, 0, 1, 2, 1},
        {4, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 0, 2, 0, 2},
        {4, 0, 0, 0, 0, 0, 2, 2, 0, 2, 1, 1, 0, 2, 1, 1},
        {4, 0, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 0, 1, 1, 2},
        {3, 1, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 1, 0, 0, 3},
        {3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3},
        {3, 0, 0, 1, 0, 3, 0, 1, 1, 0, 3, 0, 0, 1, 1, 2},
        {3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 3, 1, 1, 1, 1, 1},
        {3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2},
        {3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 2, 2, 1, 1, 2, 0},
        {3, 1, 0, 0, 0, 3, 0, 1, 1, 0, 2, 1, 0, 0, 2, 2},
        {3, 0, 0, 1, 0, 3, 1, 0, 0, 1, 2, 1, 1, 0, 1, 2},
        {3, 0, 0, 1, 0, 3, 1, 0, 1, 0, 2, 1, 0, 1, 1, 2},
        {3, 0, 0, 1, 0, 3, 0, 1, 0, 1, 2, 1, 1, 0, 2, 1},
        {3, 0, 0, 1, 0, 3, 1, 0, 0, 0, 2, 2, 1, 1, 1, 1},
        {3, 0, 0, 1, 0, 2, 2, 0, 0, 2, 0, 2, 1, 0, 2, 1},
        {3, 0, 1, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 2, 1, 1},
        {3, 1, 0, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 1, 2, 1},
        {3, 1, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 1, 0, 1, 2},
        {3, 1, 0, 0, 1, 1, 1, 1, 0, 2, 1, 1, 0, 0, 2, 2},
        {3, 1, 0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 0, 1, 1, 2},
        {3, 0, 0, 1, 0, 2, 1, 1, 0, 1, 2, 1, 1, 1, 1, 1},
        {2, 2, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 0, 2},
        {2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2},
        {2, 2, 0, 0, 2, 1, 1, 0, 0, 1, 1, 2, 0, 0, 2, 2},
        {2, 1, 0, 1, 0, 2, 2, 0, 1, 0, 2, 1, 1, 1, 0, 2},
        {2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 0, 2},
        {2, 1, 1, 0, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 0, 2},
        {2, 1, 1, 0, 1, 2, 1, 0, 1, 0, 1, 2, 0, 1, 1, 2},
        {2, 1, 1, 0, 1, 2, 0, 1, 1, 1, 1, 1, 0, 0, 2, 2},
        {2, 2, 0, 0, 0, 0, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1},
        {2, 0, 1, 1, 2, 0, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1},
        {2, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 1, 1},
        {2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<PowerProductTable> make_power_product_tables() {
  std::vector<PowerProductTable> out;
  out.push_back({2, 3,
                 {{"0 * 0 * 0", 1}, {"0 * 0 * 1", -3}, {"0 * 1 * 1", 3}, {"1 * 1 * 1", -1}},
                 {}});
  out.push_back({3, 2,
                 {{"0 * 0", 1},
                  {"0 * 1", -6},
                  {"1 * 1", 9},
                  {"0 * 2", 4},
                  {"1 * 2", -12},
                  {"2 * 2", 4}},
                 {}});
  out.push_back({3, 3,
                 {{"0 * 0 * 0", 1},
                  {"0 * 0 * 1", -9},
                  {"0 * 1 * 1", 27},
                  {"0 * 0 * 2", 6},
                  {"1 * 1 * 1", -27},
                  {"0 * 1 * 2", -36},
                  {"1 * 1 * 2", 54},
                  {"0 * 2 * 2", 12},
                  {"1 * 2 * 2", -36},
                  {"2 * 2 * 2", 8}},
                 {}});
  // independently recomputed coefficients for the published blank table
  out.push_back({4, 2,
                 {{"0 * 0", 1},
                  {"0 * 1", -12},
                  {"1 * 1", 36},
                  {"0 * 1^2", 6},
                  {"0 * 2", 16},
                  {"1 * 1^2", -36},
                  {"1 * 2", -96},
                  {"0 * 3", -12},
                  {"1 * 3", 72},
                  {"1^2 * 1^2", 9},
                  {"1^2 * 2", 48},
                  {"2 * 2", 64},
                  {"1^2 * 3", -36},
                  {"2 * 3", -96},
                  {"3 * 3", 36}},
                 {}});
  out.push_back({4, 3,
                 {{"0 * 0 * 0", 1},
                  {"0 * 0 * 1", -18},
                  {"0 * 1 * 1", 108},
                  {"0 * 0 * 1^2", 9},
                  {"0 * 0 * 2", 24},
                  {"1 * 1 * 1", -216},
                  {"0 * 1 * 1^2", -108},
                  {"0 * 1 * 2", -288},
                  {"0 * 0 * 3", -18},
                  {"1 * 1 * 1^2", 324},
                  {"1 * 1 * 2", 864},
                  {"0 * 1 * 3", 108},
                  {"0 * 1^2 * 1^2", 27},
                  {"0 * 1^2 * 2", 144},
                  {"0 * 2 * 2", 192},
                  {"1 * 1 * 3", -648},
                  {"1 * 1^2 * 1^2", -162},
                  {"1 * 1^2 * 2", -864},
                  {"1 * 2 * 2", -1152},
                  {"0 * 1^2 * 3", -54},
                  {"0 * 2 * 3", -288},
                  {"1 * 1^2 * 3", 648},
                  {"1 * 2 * 3", 1728},
                  {"1^2 * 1^2 * 1^2", 27},
                  {"1^2 * 1^2 * 2", 216},
                  {"1^2 * 2 * 2", 576},
                  {"2 * 2 * 2", 512},
                  {"0 * 3 * 3", 108},
                  {"1 * 3 * 3", -648},
                  {"1^2 * 1^2 * 3", -162},
                  {"1^2 * 2 * 3", -864},
                  {"2 * 2 * 3", -1152},
                  {"1^2 * 3 * 3", 324},
                  {"2 * 3 * 3", 864},
                  {"3 * 3 * 3", -216}},
                 {{"0 * 1 * 3", 108, 216}, {"0 * 1^2 * 3", -54, -108}}});
  out.push_back({2, 5,
                 {{"0 * 0 * 0 * 0 * 0", 1},
                  {"0 * 0 * 0 * 0 * 1", -5},
                  {"0 * 0 * 0 * 1 * 1", 10},
                  {"0 * 0 * 1 * 1 * 1", -10},
                  {"0 * 1 * 1 * 1 * 1", 5},
                  {"1 * 1 * 1 * 1 * 1", -1}},
                 {}});
  out.push_back({3, 5,
                 {{"0 * 0 * 0 * 0 * 0", 1},
                  {"0 * 0 * 0 * 0 * 1", -15},
                  {"0 * 0 * 0 * 1 * 1", 90},
                  {"0 * 0 * 0 * 0 * 2", 10},
                  {"0 * 0 * 1 * 1 * 1", -270},
                  {"0 * 0 * 0 * 1 * 2", -120},
                  {"0 * 1 * 1 * 1 * 1", 405},
                  {"0 * 0 * 1 * 1 * 2", 540},
                  {"0 * 0 * 0 * 2 * 2", 40},
                  {"1 * 1 * 1 * 1 * 1", -243},
                  {"0 * 1 * 1 * 1 * 2", -1080},
                  {"0 * 0 * 1 * 2 * 2", -360},
                  {"1 * 1 * 1 * 1 * 2", 810},
                  {"0 * 1 * 1 * 2 * 2", 1080},
                  {"0 * 0 * 2 * 2 * 2", 80},
                  {"1 * 1 * 1 * 2 * 2", -1080},
                  {"0 * 1 * 2 * 2 * 2", -480},
                  {"1 * 1 * 2 * 2 * 2", 720},
                  {"0 * 2 * 2 * 2 * 2", 80},
                  {"1 * 2 * 2 * 2 * 2", -240},
                  {"2 * 2 * 2 * 2 * 2", 32}},
                 {}});
  return out;
}

std::vector<std::vector<std::pair<std::string, std::int64_t>>> make_census_tables() {
  return {
      {},                                              // n = 0 unused
      {{"0", 1}},                                      // n = 1
      {{"0", 1}, {"1", -1}},                           // n = 2
      {{"0", 1}, {"1", -3}, {"2", 2}},                 // n = 3
      {{"0", 1}, {"1", -6}, {"1^2", 3}, {"2", 8}, {"3", -6}},
      {{"0", 1}, {"1", -10}, {"1^2", 15}, {"2", 20}, {"2 1", -20}, {"3", -30}, {"4", 24}},
      {{"0", 1},
       {"1", -15},
       {"1^2", 45},
       {"1^3", -15},
       {"2", 40},
       {"2 1", -120},
       {"2^2", 40},
       {"3", -90},
       {"3 1", 90},
       {"4", 144},
       {"5", -120}},
  };
}

}  // namespace

const std::vector<ExpansionTable>& expansion_tables() {
  static const std::vector<ExpansionTable> tables = make_expansion_tables();
  return tables;
}

const ExpansionTable& expansion_table(int rank, int order) {
  for (const auto& t : expansion_tables())
    if (t.rank == rank && t.order == order) return t;
  throw std::invalid_argument("expansion_table: no reference table for this rank/order");
}

const std::vector<ClassTable>& class_tables() {
  static const std::vector<ClassTable> tables = make_class_tables();
  return tables;
}

const ClassTable& class_table(int rank, int order) {
  for (const auto& t : class_tables())
    if (t.rank == rank && t.order == order) return t;
  throw std::invalid_argument("class_table: no reference table for this rank/order");
}

const std::vector<PowerProductTable>& power_product_tables() {
  static const std::vector<PowerProductTable> tables = make_power_product_tables();
  return tables;
}

const PowerProductTable& power_product_table(int n, int k) {
  for (const auto& t : power_product_tables())
    if (t.n == n && t.k == k) return t;
  throw std::invalid_argument("power_product_table: no reference table for this n/k");
}

const std::vector<std::pair<std::string, std::int64_t>>& census_table(int n) {
  static const auto tables = make_census_tables();
  if (n < 1 || n >= static_cast<int>(tables.size()))
    throw std::invalid_argument("census_table: n out of range");
  return tables[static_cast<std::size_t>(n)];
}

const std::vector<std::int64_t>& partition_count_reference() {
  static const std::vector<std::int64_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  return p;
}

const std::vector<std::int64_t>& rank4_series_reference() {
  // first five published; the rest recomputed from the generating product
  static const std::vector<std::int64_t> b = {1, 1, 3, 9, 36, 168, 961, 6403, 49302};
  return b;
}

}  // namespace hyperinv::reference
