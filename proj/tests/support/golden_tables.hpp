#pragma once

// Reference reliability tables, values as printed (no rounding applied).

#include <array>
#include <optional>

namespace sfcrel::golden {

struct Table2Cell {
  int nr;
  int delta;
  int case_id;
  int psi;
  int r;
  std::optional<double> value;  // empty where the table only shows a limit
};

inline const std::array<Table2Cell, 192> kTable2 = {{
    {4, 1, 1, 4, 0, 0.9595298551},
    {4, 1, 1, 4, 1, 0.9995123444},
    {4, 1, 1, 4, 100, std::nullopt},
    {4, 1, 1, 8, 0, 0.9217205502},
    {4, 1, 1, 8, 1, 0.9990295230},
    {4, 1, 1, 8, 100, std::nullopt},
    {4, 1, 2, 4, 0, 0.9999300030},
    {4, 1, 2, 4, 1, 0.9999999963},
    {4, 1, 2, 4, 100, std::nullopt},
    {4, 1, 2, 8, 0, 0.9998900055},
    {4, 1, 2, 8, 1, 0.9999999935},
    {4, 1, 2, 8, 100, std::nullopt},
    {4, 2, 1, 4, 0, 0.9566541431},
    {4, 2, 1, 4, 1, 0.9995075495},
    {4, 2, 1, 4, 100, std::nullopt},
    {4, 2, 1, 8, 0, 0.9152878303},
    {4, 2, 1, 8, 1, 0.9990157556},
    {4, 2, 1, 8, 100, std::nullopt},
    {4, 2, 2, 4, 0, 0.9999000045},
    {4, 2, 2, 4, 1, 0.9999999948},
    {4, 2, 2, 4, 100, std::nullopt},
    {4, 2, 2, 8, 0, 0.9998200153},
    {4, 2, 2, 8, 1, 0.9999999900},
    {4, 2, 2, 8, 100, std::nullopt},
    {4, 3, 1, 4, 0, 0.9563671756},
    {4, 3, 1, 4, 1, 0.9995073731},
    {4, 3, 1, 4, 100, std::nullopt},
    {4, 3, 1, 8, 0, 0.9146473210},
    {4, 3, 1, 8, 1, 0.9990150262},
    {4, 3, 1, 8, 100, std::nullopt},
    {4, 3, 2, 4, 0, 0.9998700078},
    {4, 3, 2, 4, 1, 0.9999999939},
    {4, 3, 2, 4, 100, std::nullopt},
    {4, 3, 2, 8, 0, 0.9997500300},
    {4, 3, 2, 8, 1, 0.9999999879},
    {4, 3, 2, 8, 100, std::nullopt},
    {4, 4, 1, 4, 0, 0.9563384848},
    {4, 4, 1, 4, 1, 0.9995073585},
    {4, 4, 1, 4, 100, std::nullopt},
    {4, 4, 1, 8, 0, 0.9145832976},
    {4, 4, 1, 8, 1, 0.9990149596},
    {4, 4, 1, 8, 100, std::nullopt},
    {4, 4, 2, 4, 0, 0.9998400120},
    {4, 4, 2, 4, 1, 0.9999999936},
    {4, 4, 2, 4, 100, std::nullopt},
    {4, 4, 2, 8, 0, 0.9996800496},
    {4, 4, 2, 8, 1, 0.9999999872},
    {4, 4, 2, 8, 100, std::nullopt},
    {3, 1, 1, 4, 0, 0.9595298551},
    {3, 1, 1, 4, 1, 0.9995031488},
    {3, 1, 1, 4, 100, 0.9999899999},
    {3, 1, 1, 8, 0, 0.9217205502},
    {3, 1, 1, 8, 1, 0.9990210788},
    {3, 1, 1, 8, 100, 0.9999899999},
    {3, 1, 2, 4, 0, 0.9999300030},
    {3, 1, 2, 4, 1, 0.9999899976},
    {3, 1, 2, 4, 100, 0.9999899999},
    {3, 1, 2, 8, 0, 0.9998900055},
    {3, 1, 2, 8, 1, 0.9999899956},
    {3, 1, 2, 8, 100, 0.9999899999},
    {3, 2, 1, 4, 0, 0.9566541431},
    {3, 2, 1, 4, 1, 0.9994984114},
    {3, 2, 1, 4, 100, 0.9999899999},
    {3, 2, 1, 8, 0, 0.9152878303},
    {3, 2, 1, 8, 1, 0.9990074399},
    {3, 2, 1, 8, 100, 0.9999899999},
    {3, 2, 2, 4, 0, 0.9999000045},
    {3, 2, 2, 4, 1, 0.9999899967},
    {3, 2, 2, 4, 100, 0.9999899999},
    {3, 2, 2, 8, 0, 0.9998200153},
    {3, 2, 2, 8, 1, 0.9999899935},
    {3, 2, 2, 8, 100, 0.9999899999},
    {3, 3, 1, 4, 0, 0.9563671756},
    {3, 3, 1, 4, 1, 0.9994982407},
    {3, 3, 1, 4, 100, 0.9999899999},
    {3, 3, 1, 8, 0, 0.9146473210},
    {3, 3, 1, 8, 1, 0.9990067233},
    {3, 3, 1, 8, 100, 0.9999899999},
    {3, 3, 2, 4, 0, 0.9998700078},
    {3, 3, 2, 4, 1, 0.9999899964},
    {3, 3, 2, 4, 100, 0.9999899999},
    {3, 3, 2, 8, 0, 0.9997500300},
    {3, 3, 2, 8, 1, 0.9999899928},
    {3, 3, 2, 8, 100, 0.9999899999},
    {3, 4, 1, 4, 0, 0.9563384848},
    {3, 4, 1, 4, 1, 0.9994682561},
    {3, 4, 1, 4, 100, 0.9999600006},
    {3, 4, 1, 8, 0, 0.9145832976},
    {3, 4, 1, 8, 1, 0.9989367949},
    {3, 4, 1, 8, 100, 0.9999200028},
    {3, 4, 2, 4, 0, 0.9998400120},
    {3, 4, 2, 4, 1, 0.9999599970},
    {3, 4, 2, 4, 100, 0.9999600006},
    {3, 4, 2, 8, 0, 0.9996800496},
    {3, 4, 2, 8, 1, 0.9999199956},
    {3, 4, 2, 8, 100, 0.9999200028},
    {2, 1, 1, 4, 0, 0.9595298551},
    {2, 1, 1, 4, 1, 0.9994111840},
    {2, 1, 1, 4, 100, 0.9998900009},
    {2, 1, 1, 8, 0, 0.9217205502},
    {2, 1, 1, 8, 1, 0.9989366284},
    {2, 1, 1, 8, 100, 0.9998900009},
    {2, 1, 2, 4, 0, 0.9999300030},
    {2, 1, 2, 4, 1, 0.9999799988},
    {2, 1, 2, 4, 100, 0.9999800001},
    {2, 1, 2, 8, 0, 0.9998900055},
    {2, 1, 2, 8, 1, 0.9999799976},
    {2, 1, 2, 8, 100, 0.9999800001},
    {2, 2, 1, 4, 0, 0.9566541431},
    {2, 2, 1, 4, 1, 0.9994070213},
    {2, 2, 1, 4, 100, 0.9998900009},
    {2, 2, 1, 8, 0, 0.9152878303},
    {2, 2, 1, 8, 1, 0.9989242748},
    {2, 2, 1, 8, 100, 0.9998900009},
    {2, 2, 2, 4, 0, 0.9999000045},
    {2, 2, 2, 4, 1, 0.9999799985},
    {2, 2, 2, 4, 100, 0.9999800001},
    {2, 2, 2, 8, 0, 0.9998200153},
    {2, 2, 2, 8, 1, 0.9999799969},
    {2, 2, 2, 8, 100, 0.9999800001},
    {2, 3, 1, 4, 0, 0.9563671756},
    {2, 3, 1, 4, 1, 0.9991072291},
    {2, 3, 1, 4, 100, 0.9995900640},
    {2, 3, 1, 8, 0, 0.9146473210},
    {2, 3, 1, 8, 1, 0.9982252375},
    {2, 3, 1, 8, 100, 0.9991902879},
    {2, 3, 2, 4, 0, 0.9998700078},
    {2, 3, 2, 4, 1, 0.9999499994},
    {2, 3, 2, 4, 100, 0.9999500010},
    {2, 3, 2, 8, 0, 0.9997500300},
    {2, 3, 2, 8, 1, 0.9999100004},
    {2, 3, 2, 8, 100, 0.9999100036},
    {2, 4, 1, 4, 0, 0.9563384848},
    {2, 4, 1, 4, 1, 0.9990772562},
    {2, 4, 1, 4, 100, 0.9995600766},
    {2, 4, 1, 8, 0, 0.9145832976},
    {2, 4, 1, 8, 1, 0.9981553639},
    {2, 4, 1, 8, 100, 0.9991203467},
    {2, 4, 2, 4, 0, 0.9998400120},
    {2, 4, 2, 4, 1, 0.9999200012},
    {2, 4, 2, 4, 100, 0.9999200028},
    {2, 4, 2, 8, 0, 0.9996800496},
    {2, 4, 2, 8, 1, 0.9998400088},
    {2, 4, 2, 8, 100, 0.9998400120},
    {1, 1, 1, 4, 0, 0.9595298551},
    {1, 1, 1, 4, 1, 0.9984906149},
    {1, 1, 1, 4, 100, 0.9988901109},
    {1, 1, 1, 8, 0, 0.9217205502},
    {1, 1, 1, 8, 1, 0.9980912785},
    {1, 1, 1, 8, 100, 0.9988901109},
    {1, 1, 2, 4, 0, 0.9999300030},
    {1, 1, 2, 4, 1, 0.9999699999},
    {1, 1, 2, 4, 100, 0.9999700003},
    {1, 1, 2, 8, 0, 0.9998900055},
    {1, 1, 2, 8, 1, 0.9999699995},
    {1, 1, 2, 8, 100, 0.9999700003},
    {1, 2, 1, 4, 0, 0.9566541431},
    {1, 2, 1, 4, 1, 0.9954981375},
    {1, 2, 1, 4, 100, 0.9958964363},
    {1, 2, 1, 8, 0, 0.9152878303},
    {1, 2, 1, 8, 1, 0.9911255646},
    {1, 2, 1, 8, 100, 0.9919188219},
    {1, 2, 2, 4, 0, 0.9999000045},
    {1, 2, 2, 4, 1, 0.9999400011},
    {1, 2, 2, 4, 100, 0.9999400015},
    {1, 2, 2, 8, 0, 0.9998200153},
    {1, 2, 2, 8, 1, 0.9999000037},
    {1, 2, 2, 8, 100, 0.9999000045},
    {1, 3, 1, 4, 0, 0.9563671756},
    {1, 3, 1, 4, 1, 0.9951995179},
    {1, 3, 1, 4, 100, 0.9955976973},
    {1, 3, 1, 8, 0, 0.9146473210},
    {1, 3, 1, 8, 1, 0.9904319848},
    {1, 3, 1, 8, 100, 0.9912246871},
    {1, 3, 2, 4, 0, 0.9998700078},
    {1, 3, 2, 4, 1, 0.9999100032},
    {1, 3, 2, 4, 100, 0.9999100036},
    {1, 3, 2, 8, 0, 0.9997500300},
    {1, 3, 2, 8, 1, 0.9998300128},
    {1, 3, 2, 8, 100, 0.9998300136},
    {1, 4, 1, 4, 0, 0.9563384848},
    {1, 4, 1, 4, 1, 0.9951696622},
    {1, 4, 1, 4, 100, 0.9955678297},
    {1, 4, 1, 8, 0, 0.9145832976},
    {1, 4, 1, 8, 1, 0.9903626567},
    {1, 4, 1, 8, 100, 0.9911553034},
    {1, 4, 2, 4, 0, 0.9998400120},
    {1, 4, 2, 4, 1, 0.9998800062},
    {1, 4, 2, 4, 100, 0.9998800066},
    {1, 4, 2, 8, 0, 0.9996800496},
    {1, 4, 2, 8, 1, 0.9997600268},
    {1, 4, 2, 8, 100, 0.9997600276},
}};

struct Table3Cell {
  int k;
  int r;
  int psi;
  double value;
};

inline const std::array<Table3Cell, 40> kTable3 = {{
    {1, 0, 4, 0.959529855054096},
    {4, 0, 4, 0.847683965207723},
    {8, 0, 4, 0.718568104870289},
    {1, 0, 8, 0.921720550240843},
    {4, 0, 8, 0.721767099608634},
    {8, 0, 8, 0.520947746077460},
    {8, 1, 4, 0.983696719311009},
    {8, 1, 8, 0.968371471691151},
    {4, 1, 4, 0.995273874413365},
    {8, 2, 4, 0.999384198321856},
    {4, 1, 8, 0.990697185787667},
    {8, 2, 8, 0.998774974539633},
    {8, 3, 4, 0.999981195954079},
    {8, 3, 8, 0.999962424513603},
    {4, 2, 4, 0.999893621626573},
    {8, 4, 4, 0.999999500094456},
    {4, 2, 8, 0.999787784003278},
    {8, 4, 8, 0.999999000321022},
    {8, 5, 4, 0.999999987999969},
    {8, 5, 8, 0.999999976000402},
    {4, 3, 4, 0.999997932451063},
    {8, 6, 4, 0.999999999734000},
    {4, 3, 8, 0.999995866449611},
    {8, 6, 8, 0.999999999468002},
    {8, 7, 4, 0.999999999994470},
    {8, 7, 8, 0.999999999988942},
    {1, 1, 4, 0.999512344397461},
    {4, 4, 4, 0.999999963313851},
    {8, 8, 4, 0.999999999999890},
    {1, 1, 8, 0.999029523012867},
    {4, 4, 8, 0.999999926631523},
    {8, 8, 8, 0.999999999999781},
    {8, 9, 4, 0.999999999999997},
    {8, 9, 8, 0.999999999999995},
    {4, 5, 4, 0.999999999389706},
    {8, 10, 4, 0.999999999999999},
    {4, 5, 8, 0.999999998779421},
    {8, 10, 8, 0.999999999999998},
    {8, 11, 4, 0.999999999999999},
    {8, 11, 8, 0.999999999999999},
}};

struct Table4Cell {
  int active_nr;
  int active_delta;
  int backup_nr;
  int backup_delta;
  double value;
};

inline const std::array<Table4Cell, 128> kTable4 = {{
    {4, 1, 4, 1, 0.9999979324510640},
    {4, 1, 4, 2, 0.9999979318655040},
    {4, 1, 4, 3, 0.9999979318286700},
    {4, 1, 4, 4, 0.9999979318251840},
    {4, 1, 3, 1, 0.9999964124393610},
    {4, 1, 3, 2, 0.9999964118583170},
    {4, 1, 3, 3, 0.9999964118218760},
    {4, 1, 3, 4, 0.9999961885402720},
    {4, 2, 4, 1, 0.9999979317835310},
    {4, 2, 4, 2, 0.9999979317005130},
    {4, 2, 4, 3, 0.9999979316975760},
    {4, 2, 4, 4, 0.9999979316973230},
    {4, 2, 3, 1, 0.9999963106145000},
    {4, 2, 3, 2, 0.9999963105326350},
    {4, 2, 3, 3, 0.9999963105297770},
    {4, 2, 3, 4, 0.9999961883993840},
    {4, 3, 4, 1, 0.9999979317535350},
    {4, 3, 4, 2, 0.9999979316968350},
    {4, 3, 4, 3, 0.9999979316951940},
    {4, 3, 4, 4, 0.9999979316950590},
    {4, 3, 3, 1, 0.9999963005396360},
    {4, 3, 3, 2, 0.9999963004838190},
    {4, 3, 3, 3, 0.9999963004822340},
    {4, 3, 3, 4, 0.9999961883957160},
    {4, 4, 4, 1, 0.9999979317508330},
    {4, 4, 4, 2, 0.9999979316965460},
    {4, 4, 4, 3, 0.9999979316950160},
    {4, 4, 4, 4, 0.9999979316948910},
    {4, 4, 3, 1, 0.9999962995331520},
    {4, 4, 3, 2, 0.9999962994797230},
    {4, 4, 3, 3, 0.9999962994782460},
    {4, 4, 3, 4, 0.9999961883954060},
    {3, 1, 4, 1, 0.9999879366414630},
    {3, 1, 4, 2, 0.9999879360639370},
    {3, 1, 4, 3, 0.9999879360276900},
    {3, 1, 4, 4, 0.9999879360242610},
    {3, 1, 3, 1, 0.9999864169785840},
    {3, 1, 3, 2, 0.9999864164055270},
    {3, 1, 3, 3, 0.9999864163696700},
    {3, 1, 3, 4, 0.9999861942812340},
    {3, 2, 4, 1, 0.9999879359819710},
    {3, 2, 4, 2, 0.9999879359019470},
    {3, 2, 4, 3, 0.9999879358991620},
    {3, 2, 4, 4, 0.9999879358989240},
    {3, 2, 3, 1, 0.9999863151586640},
    {3, 2, 3, 2, 0.9999863150797630},
    {3, 2, 3, 3, 0.9999863150770560},
    {3, 2, 3, 4, 0.9999861941428650},
    {3, 3, 4, 1, 0.9999879359525630},
    {3, 3, 4, 2, 0.9999879358984220},
    {3, 3, 4, 3, 0.9999879358968970},
    {3, 3, 4, 4, 0.9999879358967720},
    {3, 3, 3, 1, 0.9999863050840810},
    {3, 3, 3, 2, 0.9999863050307960},
    {3, 3, 3, 3, 0.9999863050293240},
    {3, 3, 3, 4, 0.9999861941393090},
    {3, 4, 4, 1, 0.9999579366144800},
    {3, 4, 4, 2, 0.9999579365603410},
    {3, 4, 4, 3, 0.9999579365588160},
    {3, 4, 4, 4, 0.9999579365586910},
    {3, 4, 3, 1, 0.9999563057949240},
    {3, 4, 3, 2, 0.9999563057416410},
    {3, 4, 3, 3, 0.9999563057401690},
    {3, 4, 3, 4, 0.9999561948534810},
    {2, 1, 4, 1, 0.9998879792477240},
    {2, 1, 4, 2, 0.9998879787470810},
    {2, 1, 4, 3, 0.9998879787164170},
    {2, 1, 4, 4, 0.9998879787135260},
    {2, 1, 3, 1, 0.9998864630738730},
    {2, 1, 3, 2, 0.9998864625772640},
    {2, 1, 3, 3, 0.9998864625469480},
    {2, 1, 3, 4, 0.9998862523920450},
    {2, 2, 4, 1, 0.9998879786661850},
    {2, 2, 4, 2, 0.9998879786134870},
    {2, 2, 4, 3, 0.9998879786120130},
    {2, 2, 4, 4, 0.9998879786118920},
    {2, 2, 3, 1, 0.9998863613009290},
    {2, 2, 3, 2, 0.9998863612490670},
    {2, 2, 3, 3, 0.9998863612476450},
    {2, 2, 3, 4, 0.9998862522773380},
    {2, 3, 4, 1, 0.9995880422682250},
    {2, 3, 4, 2, 0.9995880422155420},
    {2, 3, 4, 3, 0.9995880422140690},
    {2, 3, 4, 4, 0.9995880422139490},
    {2, 3, 3, 1, 0.9995864253881300},
    {2, 3, 3, 2, 0.9995864253362840},
    {2, 3, 3, 3, 0.9995864253348620},
    {2, 3, 3, 4, 0.9995863163972430},
    {2, 4, 4, 1, 0.9995580549268320},
    {2, 4, 4, 2, 0.9995580548741510},
    {2, 4, 4, 3, 0.9995580548726770},
    {2, 4, 4, 4, 0.9995580548725570},
    {2, 4, 3, 1, 0.9995564380952430},
    {2, 4, 3, 2, 0.9995564380433980},
    {2, 4, 3, 3, 0.9995564380419760},
    {2, 4, 3, 4, 0.9995563291076250},
    {1, 1, 4, 1, 0.9988884761855780},
    {1, 1, 4, 2, 0.9988884761457560},
    {1, 1, 4, 3, 0.9988884761447220},
    {1, 1, 4, 4, 0.9988884761446380},
    {1, 1, 3, 1, 0.9988869949822420},
    {1, 1, 3, 2, 0.9988869949430760},
    {1, 1, 3, 3, 0.9988869949420800},
    {1, 1, 3, 4, 0.9988869043083370},
    {1, 2, 4, 1, 0.9958948064235610},
    {1, 2, 4, 2, 0.9958948063838590},
    {1, 2, 4, 3, 0.9958948063828270},
    {1, 2, 4, 4, 0.9958948063827440},
    {1, 2, 3, 1, 0.9958933296593930},
    {1, 2, 3, 2, 0.9958933296203440},
    {1, 2, 3, 3, 0.9958933296193510},
    {1, 2, 3, 4, 0.9958932392572380},
    {1, 3, 4, 1, 0.9955960678574820},
    {1, 3, 4, 2, 0.9955960678177920},
    {1, 3, 4, 3, 0.9955960678167610},
    {1, 3, 4, 4, 0.9955960678166780},
    {1, 3, 3, 1, 0.9955945915362990},
    {1, 3, 3, 2, 0.9955945914972620},
    {1, 3, 3, 3, 0.9955945914962690},
    {1, 3, 3, 4, 0.9955945011612620},
    {1, 4, 4, 1, 0.9955662002741250},
    {1, 4, 4, 2, 0.9955662002344360},
    {1, 4, 4, 3, 0.9955662002334050},
    {1, 4, 4, 4, 0.9955662002333220},
    {1, 4, 3, 1, 0.9955647239972310},
    {1, 4, 3, 2, 0.9955647239581950},
    {1, 4, 3, 3, 0.9955647239572020},
    {1, 4, 3, 4, 0.9955646336249050},
}};

}  // namespace sfcrel::golden
