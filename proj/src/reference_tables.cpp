#include "augsimp/reference_tables.hpp"

namespace augsimp {

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = {
      {"breve-cil", "breve-cil", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {0, 2, 1, 0, 0, 0, 0, 0},
        {0, 0, 3, 2, 0, 0, 0, 0},
        {0, 0, 0, 4, 3, 0, 0, 0},
        {0, 0, 0, 0, 5, 4, 0, 0},
        {0, 0, 0, 0, 0, 6, 5, 0},
        {0, 0, 0, 0, 0, 0, 7, 6},
        {0, 0, 0, 0, 0, 0, 0, 8}}},
      {"cil-partial", "cil-partial", -1, -1,
       {{0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 4, 2, 0, 0, 0, 0, 0},
        {1, 6, 12, 6, 0, 0, 0, 0},
        {1, 8, 22, 28, 12, 0, 0, 0},
        {1, 10, 35, 60, 55, 20, 0, 0},
        {1, 12, 51, 110, 135, 96, 30, 0},
        {1, 14, 70, 182, 280, 266, 154, 42}}},
      {"cil", "cil", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 2, 1, 0, 0, 0, 0, 0, 0},
        {1, 4, 5, 2, 0, 0, 0, 0, 0},
        {1, 6, 12, 10, 3, 0, 0, 0, 0},
        {1, 8, 22, 28, 17, 4, 0, 0, 0},
        {1, 10, 35, 60, 55, 26, 5, 0, 0},
        {1, 12, 51, 110, 135, 96, 37, 6, 0},
        {1, 14, 70, 182, 200, 266, 154, 50, 7}}},
      {"breve-cil0", "breve-cil0", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {0, 2, 0, 0, 0, 0, 0, 0},
        {0, 0, 3, 0, 0, 0, 0, 0},
        {0, 0, 0, 4, 0, 0, 0, 0},
        {0, 0, 0, 0, 5, 0, 0, 0},
        {0, 0, 0, 0, 0, 6, 0, 0},
        {0, 0, 0, 0, 0, 0, 7, 0},
        {0, 0, 0, 0, 0, 0, 0, 8}}},
      {"cil0-partial", "cil0-partial", -1, -1,
       {{0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 4, 0, 0, 0, 0, 0, 0},
        {1, 6, 9, 0, 0, 0, 0, 0},
        {1, 8, 18, 16, 0, 0, 0, 0},
        {1, 10, 30, 40, 25, 0, 0, 0},
        {1, 12, 45, 80, 75, 36, 0, 0},
        {1, 14, 63, 140, 175, 126, 49, 0}}},
      {"cil0", "cil0", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {1, 2, 0, 0, 0, 0, 0, 0},
        {1, 4, 3, 0, 0, 0, 0, 0},
        {1, 6, 9, 4, 0, 0, 0, 0},
        {1, 8, 18, 16, 5, 0, 0, 0},
        {1, 10, 30, 40, 25, 6, 0, 0},
        {1, 12, 45, 80, 75, 36, 7, 0},
        {1, 14, 63, 140, 175, 126, 49, 8}}},
      {"breve-cil2", "breve-cil2", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {0, 2, 1, 0, 0, 0, 0, 0},
        {0, 0, 4, 4, 1, 0, 0, 0},
        {0, 0, 0, 8, 12, 6, 1, 0},
        {0, 0, 0, 0, 16, 32, 24, 8},
        {0, 0, 0, 0, 0, 32, 80, 80},
        {0, 0, 0, 0, 0, 0, 64, 192},
        {0, 0, 0, 0, 0, 0, 0, 128}}},
      {"cil2-partial", "cil2-partial", -1, -1,
       {{0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 4, 2, 0, 0, 0, 0, 0},
        {1, 6, 15, 12, 3, 0, 0, 0},
        {1, 8, 28, 56, 54, 24, 4, 0},
        {1, 10, 45, 120, 210, 220, 130, 40},
        {1, 12, 66, 220, 495, 792, 860, 600},
        {1, 14, 91, 364, 1001, 2002, 3003, 3304},
        {1, 16, 120, 560, 1820, 4368, 8008, 11440}}},
      {"cil2", "cil2", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {1, 2, 1, 0, 0, 0, 0, 0},
        {1, 4, 6, 4, 1, 0, 0, 0},
        {1, 6, 15, 20, 15, 6, 1, 0},
        {1, 8, 28, 56, 70, 56, 28, 8},
        {1, 10, 45, 120, 210, 252, 120, 45},
        {1, 12, 66, 220, 495, 792, 495, 220},
        {1, 14, 91, 364, 1001, 2002, 3003, 3432}}},
      {"cad+", "cad+", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0, 0, 0},
        {1, 3, 2, 0, 0, 0, 0, 0},
        {1, 7, 12, 6, 0, 0, 0, 0},
        {1, 15, 50, 60, 24, 0, 0, 0},
        {1, 31, 180, 390, 360, 120, 0, 0},
        {1, 63, 602, 2100, 3360, 2520, 720, 0},
        {1, 127, 1932, 10206, 25200, 31920, 20160, 5040}}},
      {"breve-cad+", "breve-cad+", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0, 0},
        {0, 1, 2, 0, 0, 0, 0, 0},
        {0, 1, 6, 6, 0, 0, 0, 0},
        {0, 1, 14, 36, 24, 0, 0, 0},
        {0, 1, 30, 150, 240, 120, 0, 0},
        {0, 1, 62, 540, 1560, 1800, 720, 0},
        {0, 1, 126, 1806, 8400, 16800, 15120, 5040}}},
      {"cad", "cad", -1, -1,
       {{1, 1, 0, 0, 0, 0, 0, 0},
        {1, 2, 1, 0, 0, 0, 0, 0},
        {1, 4, 5, 2, 0, 0, 0, 0},
        {1, 8, 19, 18, 6, 0, 0, 0},
        {1, 16, 65, 110, 84, 24, 0, 0},
        {1, 32, 211, 570, 750, 480, 120, 0}}},
      {"intro-breve-cil", "breve-cil", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0},
        {0, 2, 1, 0, 0, 0, 0},
        {0, 0, 3, 2, 0, 0, 0},
        {0, 0, 0, 4, 3, 0, 0},
        {0, 0, 0, 0, 5, 4, 0}}},
      {"intro-breve-cil0", "breve-cil0", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0},
        {0, 2, 0, 0, 0, 0, 0},
        {0, 0, 3, 0, 0, 0, 0},
        {0, 0, 0, 4, 0, 0, 0},
        {0, 0, 0, 0, 5, 0, 0}}},
      {"intro-breve-cil2", "breve-cil2", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0},
        {0, 2, 1, 0, 0, 0, 0},
        {0, 0, 4, 4, 1, 0, 0},
        {0, 0, 0, 8, 12, 6, 1},
        {0, 0, 0, 0, 16, 32, 24}}},
      {"intro-breve-sd", "breve-cad+", -1, -1,
       {{1, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0},
        {0, 1, 2, 0, 0, 0, 0},
        {0, 1, 6, 6, 0, 0, 0},
        {0, 1, 14, 36, 24, 0, 0}}},
  };
  return tables;
}

const std::vector<TableWaiver>& table_waivers() {
  static const std::vector<TableWaiver> waivers = {
      {"cil-row-6", "cil", 6, 3, 200, "the cil∂ row and the breve row force 280"},
      {"cil2-rows-4-5", "cil2", 4, 5, 120, "C(10, 6) = 210"},
      {"cil2-rows-4-5", "cil2", 4, 6, 45, "C(10, 7) = 120"},
      {"cil2-rows-4-5", "cil2", 5, 5, 495, "C(12, 6) = 924"},
      {"cil2-rows-4-5", "cil2", 5, 6, 220, "C(12, 7) = 792"},
  };
  return waivers;
}

}  // namespace augsimp
