#!/usr/bin/env python3
"""Build the bundled Turkish word-form list.

Inflects a curated stem vocabulary through the regular nominal and verbal
paradigms (vowel harmony, buffer consonants, consonant assimilation,
final-stop voicing, haplology), then adds every surface form of the
reference corpus and the canonical side of every grammar lexicon entry.
Known error forms (fused clitics, corrupted stems, the reference typos)
are excluded so they stay correctable.

Run from the repository root:

    python3 tools/build_wordlist.py

Writes src/yazim/data/wordlist.txt (one lowercase form per line, sorted).
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from yazim.lexicons import load_lexicons  # noqa: E402
from yazim.phonology import (  # noqa: E402
    BACK_VOWELS,
    VOWELS,
    drop_haplology_vowel,
    turkish_lower,
    voice_final_consonant,
)

OUT_PATH = ROOT / "src" / "yazim" / "data" / "wordlist.txt"
DATA_DIR = ROOT / "src" / "yazim" / "data"

VOICELESS = set("fstkçşhp")
EXPLICIT_TYPOS = {"yapmk", "istiyrum"}

# Monosyllabic verbs with a narrow-vowel aorist.
AORIST_NARROW = {"al", "bil", "bul", "dur", "gel", "gör", "kal", "ol", "öl", "san", "ver", "vur"}
D_SOFTENING = {"git": "gid", "et": "ed", "tat": "tad", "güt": "güd"}

_FOURFOLD = {"a": "ı", "ı": "ı", "e": "i", "i": "i", "o": "u", "u": "u", "ö": "ü", "ü": "ü"}


def last_vowel(word: str) -> str | None:
    for ch in reversed(word):
        if ch in VOWELS:
            return ch
    return None


def twofold(word: str) -> str:
    return "a" if last_vowel(word) in BACK_VOWELS else "e"


def fourfold(word: str) -> str:
    return _FOURFOLD.get(last_vowel(word) or "e", "i")


def attach(stem: str, template: str) -> str:
    """Attach one suffix template. A/I harmonize with the growing word,
    D/C assimilate after voiceless finals, and a parenthesized buffer
    letter appears only after a vowel-final stem."""
    out = stem
    m = re.match(r"^\(([ysn])\)(.*)$", template)
    if m:
        buffer_ch, template = m.group(1), m.group(2)
        if out and out[-1] in VOWELS:
            out += buffer_ch
    for ch in template:
        if ch == "A":
            out += twofold(out)
        elif ch == "I":
            out += fourfold(out)
        elif ch == "D":
            out += "t" if out and out[-1] in VOICELESS else "d"
        elif ch == "C":
            out += "ç" if out and out[-1] in VOICELESS else "c"
        else:
            out += ch
    return out


def soften_final_k(word: str) -> str:
    if word.endswith("k"):
        return word[:-1] + ("g" if len(word) > 1 and word[-2] == "n" else "ğ")
    return word


class Noun:
    """Seed noun; '+' marks final-stop voicing before a vowel suffix,
    '~' haplology (final-syllable vowel drop)."""

    def __init__(self, spec: str):
        self.voices = "+" in spec
        self.haplology = "~" in spec
        self.stem = spec.rstrip("+~")

    def vowel_stem(self) -> str:
        stem = self.stem
        if self.haplology:
            stem = drop_haplology_vowel(stem)
        if self.voices:
            stem = voice_final_consonant(stem)
        return stem

    def base(self, vowel_initial_suffix: bool) -> str:
        return self.vowel_stem() if vowel_initial_suffix else self.stem


POSS_TEMPLATES = [("Im", False), ("In", False), ("sI", True), ("ImIz", False), ("InIz", False), ("lArI", True)]
CASE_TEMPLATES = ["(y)I", "(y)A", "DA", "DAn", "(n)In", "(y)lA"]
CASE_AFTER_P3 = {"(y)I": "nI", "(y)A": "nA", "DA": "ndA", "DAn": "ndAn", "(n)In": "nIn", "(y)lA": "ylA"}


def attach_poss(stem: str, template: str) -> str:
    if template == "sI":
        return attach(stem, "sI" if stem[-1] in VOWELS else "I")
    if template == "lArI":
        return attach(stem, "lArI")
    if stem[-1] in VOWELS:
        template = template[1:]  # evim vs arabam
    return attach(stem, template)


def _poss_vowel_initial(stem: str, template: str) -> bool:
    if template == "lArI":
        return False
    if template == "sI":
        return stem[-1] not in VOWELS
    return stem[-1] not in VOWELS  # Im/In/ImIz/InIz


def _case_vowel_initial(stem: str, template: str) -> bool:
    return template in ("(y)I", "(y)A", "(n)In") and stem[-1] not in VOWELS


def noun_forms(noun: Noun) -> set[str]:
    forms: set[str] = {noun.stem}
    plural = attach(noun.stem, "lAr")
    forms.add(plural)

    for case_t in CASE_TEMPLATES:
        forms.add(attach(noun.base(_case_vowel_initial(noun.stem, case_t)), case_t))
        forms.add(attach(plural, case_t))
    forms.add(attach(noun.stem, "DA") + "ki")
    forms.add(attach(plural, "DA") + "ki")

    for poss_t, third in POSS_TEMPLATES:
        possessed = attach_poss(noun.base(_poss_vowel_initial(noun.stem, poss_t)), poss_t)
        forms.add(possessed)
        for case_t in CASE_TEMPLATES:
            suffix = CASE_AFTER_P3[case_t] if third else case_t
            forms.add(attach(possessed, suffix))
        if poss_t != "lArI":  # "evlerleri" is not a form; "evleri" covers it
            possessed_pl = attach_poss(plural, poss_t)
            forms.add(possessed_pl)
            for case_t in CASE_TEMPLATES:
                suffix = CASE_AFTER_P3[case_t] if third else case_t
                forms.add(attach(possessed_pl, suffix))
    return forms


DERIV_TEMPLATES = ["lI", "sIz", "lIk", "CI"]


def derived_forms(stem: str) -> set[str]:
    forms: set[str] = set()
    for t in DERIV_TEMPLATES:
        d = attach(stem, t)
        forms |= {d, attach(d, "lAr"), attach(d, "DA")}
    return forms


PERSONS_I = ["Im", "sIn", "", "Iz", "sInIz", "lAr"]
PERSONS_II = ["m", "n", "", "k", "nIz", "lAr"]


def verb_forms(stem: str) -> set[str]:
    forms: set[str] = set()
    vstem = D_SOFTENING.get(stem, stem)

    def present_base() -> str:
        if stem in ("ye", "de"):
            return stem[0] + "i"
        ps = vstem[:-1] if vstem[-1] in "ae" else vstem
        return ps

    def add_person_i(base: str, soften: bool = False) -> None:
        for p in PERSONS_I:
            if not p:
                forms.add(base)
                continue
            b = soften_final_k(base) if soften and p[0] == "I" else base
            forms.add(attach(b, p))

    def add_person_ii(base: str) -> None:
        for p in PERSONS_II:
            forms.add(attach(base, p) if p else base)

    add_person_ii(attach(stem, "DI"))
    add_person_i(attach(stem, "mIş"))
    ps = present_base()
    add_person_i(ps + "yor" if ps[-1] in VOWELS else attach(ps, "Iyor"))
    add_person_i(attach(vstem, "(y)AcAk"), soften=True)
    if stem[-1] in VOWELS:
        aorist = stem + "r"
    elif sum(c in VOWELS for c in stem) == 1 and stem not in AORIST_NARROW:
        aorist = attach(vstem, "Ar")
    else:
        aorist = attach(vstem, "Ir")
    add_person_i(aorist)

    neg = attach(stem, "mA")
    add_person_ii(attach(neg, "DI"))
    forms.add(attach(neg, "mIş"))
    forms.add(attach(attach(neg, "mIş"), "lAr"))
    add_person_i(attach(neg[:-1], "Iyor"))
    add_person_i(attach(neg, "(y)AcAk"), soften=True)
    forms.add(attach(neg, "z"))
    forms.add(attach(attach(neg, "z"), "lAr"))

    forms.add(attach(stem, "mAk"))
    forms.add(neg)
    necess = attach(stem, "mAlI")
    forms.add(necess)
    for p in ("yIm", "sIn", "yIz", "sInIz"):
        forms.add(attach(necess, p))
    add_person_ii(attach(stem, "sA"))
    forms.add(attach(vstem, "(y)Ip"))
    forms.add(attach(vstem, "(y)ArAk"))
    forms.add(attach(vstem, "(y)An"))
    forms.add(attach(stem, "mAdAn"))

    abil = attach(vstem, "(y)Abil")
    for t in ("Ir", "DI", "Iyor", "(y)AcAk", "mIş"):
        forms.add(attach(abil, t))

    # -DIK participle with possessives; cased third person is very common.
    for base in (stem, neg):
        soft = soften_final_k(attach(base, "DIk"))
        for poss_t, third in POSS_TEMPLATES:
            possessed = attach_poss(soft, poss_t)
            forms.add(possessed)
            if third:
                for c in ("nI", "nA", "ndA"):
                    forms.add(attach(possessed, c))
    return forms


def adjective_forms(stem: str) -> set[str]:
    # Multisyllabic k-final adjectives voice before a vowel suffix
    # (büyük → büyüğü); other finals stay plain when used nominally.
    vowel_base = stem
    if stem.endswith("k") and sum(c in VOWELS for c in stem) > 1:
        vowel_base = voice_final_consonant(stem)
    return {
        stem,
        attach(stem, "CA"),
        attach(stem, "lIk"),
        attach(stem, "lAr"),
        attach(stem, "DA"),
        attach(stem, "DAn"),
        attach(vowel_base, "(y)I"),
        attach(vowel_base, "(n)In"),
        attach(stem, "DIr"),
        attach(stem, "(y)Im"),
        attach(stem, "sIn"),
        attach(stem, "(y)Iz"),
    }


def tokens_of(text: str) -> list[str]:
    return re.findall(r"[^\W\d_]+(?:['’][^\W\d_]+)*", text, re.UNICODE)


NOUNS = """
ev oda kapı pencere duvar çatı bahçe sokak+ cadde mahalle şehir~ köy kasaba ülke
dünya deniz göl nehir~ dağ tepe orman ağaç+ çiçek+ yaprak+ kök dal taş toprak+ kum
hava su ateş rüzgar yağmur kar bulut güneş ay yıldız sabah akşam gece gündüz
gün hafta yıl saat dakika saniye zaman an devir~ mevsim ilkbahar yaz sonbahar kış
anne baba kardeş abla ağabey dede nine teyze hala amca dayı yeğen torun aile akraba
çocuk+ bebek+ genç yaşlı adam kadın erkek+ kız oğlan insan kişi arkadaş dost komşu
misafir öğretmen öğrenci doktor hemşire mühendis avukat polis asker işçi memur çiftçi
şoför aşçı garson berber terzi marangoz ressam yazar şair müzisyen oyuncu sporcu
baş göz kulak+ burun~ ağız~ diş dil dudak+ yanak+ alın~ kaş saç boyun~ omuz~ kol
dirsek+ bilek+ el parmak+ tırnak+ göğüs~ karın~ sırt bel bacak+ diz ayak+ topuk+
kalp+ akciğer mide beyin~ kemik+ kas kan ter nefes ses yüz beden vücut+
yemek+ ekmek+ peynir zeytin yumurta bal reçel tereyağı süt yoğurt+ ayran çay kahve
şeker tuz biber yağ un pirinç+ bulgur makarna çorba salata et tavuk+ balık+ sebze meyve
elma armut+ üzüm kiraz vişne şeftali kayısı erik+ karpuz kavun çilek+ muz portakal
limon mandalina domates salatalık+ patlıcan patates soğan sarımsak+ havuç+ maydanoz
kitap+ defter kalem silgi çanta okul sınıf ders ödev sınav soru cevap+ konu sayfa satır
harf kelime cümle yazı hikaye roman şiir masal destan gazete dergi haber bilgi
resim~ müzik+ şarkı türkü film tiyatro sinema sahne koltuk+ sıra masa sandalye
dolap+ raf yatak+ yastık+ yorgan battaniye halı kilim perde ayna lamba soba kalorifer
mutfak+ banyo tuvalet salon balkon merdiven asansör kat bina apartman inşaat
araba otobüs kamyon tren uçak+ gemi vapur bisiklet motosiklet taksi dolmuş yol köprü
tünel istasyon durak+ havaalanı liman bilet yolcu sürücü trafik+ ışık+ levha harita
para lira kuruş banka hesap+ borç+ kredi maaş ücret fiyat indirim vergi fatura makbuz
iş meslek+ görev toplantı proje rapor dosya belge imza kurum şirket fabrika
dükkan mağaza market pazar alışveriş müşteri satıcı ürün mal eşya paket kutu şişe
bardak+ tabak+ kaşık+ çatal bıçak+ tencere tava fincan sürahi termos
telefon bilgisayar ekran klavye fare yazıcı kamera fotoğraf video mesaj mektup+ zarf
pul adres posta kargo internet site şifre program oyun
top koşu yüzme yürüyüş maç takım saha kale gol puan turnuva madalya ödül yarış
sağlık+ hastalık+ hastane eczane ilaç+ iğne ağrı grip nezle öksürük+ muayene tahlil
ameliyat yara sargı
devlet millet vatan bayrak+ ordu savaş barış sınır yasa kural adalet mahkeme
hakim savcı tanık+ suç ceza
din inanç+ cami kilise dua oruç+ bayram kurban namaz
duygu sevgi aşk mutluluk+ üzüntü korku öfke merak umut+ hayal düş anı hatıra özlem
gurur utanç+ sevinç+ keder
akıl~ fikir~ düşünce zeka bilinç+ dikkat hafıza bilim sanat kültür tarih coğrafya
matematik+ fizik+ kimya biyoloji felsefe mantık+
başlangıç+ son orta kenar köşe merkez çevre bölge alan yer mekan konum yön kuzey güney
doğu batı sağ sol ön arka alt üst iç dış yan karşı ara
renk+ beyaz siyah sarı yeşil mor pembe gri lacivert
hayvan kedi köpek+ kuş at inek+ koyun keçi tavşan aslan kaplan ayı kurt+ tilki
sincap+ geyik+ yılan kurbağa kelebek+ arı sinek+ karınca örümcek+ balina
kartal güvercin serçe leylek+ baykuş horoz ördek+ kaz hindi
ot çim çimen çalı fidan tohum filiz sap kabuk+ çekirdek+
demir bakır altın gümüş çelik+ cam plastik+ tahta kumaş deri yün pamuk+ ipek+ kağıt+
sebep+ sonuç+ neden amaç+ hedef çare çözüm sorun mesele durum koşul şart imkan fırsat
şans talih kader kısmet
ad soyad isim~ unvan numara yaş doğum ölüm hayat yaşam ömür~
grup ekip+ üye başkan yönetici müdür patron eleman aday seçim oylama karar toplum halk
kalabalık+ nüfus göç gelenek+ görenek+ adet alışkanlık+ davranış tavır tutum
yalan gerçek+ doğruluk+ dürüstlük+ güven saygı sevap+ günah vicdan ahlak
kapak+ anahtar kilit+ zil düğme kablo pil ampul priz musluk+ boru tesisat havlu sabun
şampuan fırça tarak+ makas ayna kova bez süpürge çamaşır bulaşık+ ütü
gömlek+ pantolon etek+ ceket kaban palto mont kazak+ hırka atkı eldiven şapka kemer
çorap+ ayakkabı terlik+ çizme bot elbise kravat papyon cüzdan gözlük+ yüzük+
bilezik+ kolye küpe
oyuncak+ balon uçurtma salıncak+ kaydırak+ tahterevalli
tatil gezi yolculuk+ sefer tur kamp çadır otel pansiyon rezervasyon
pasaport vize gümrük+ döviz
fırın kasap+ manav bakkal kuaför lokanta kafe restoran otopark benzinlik+
üniversite fakülte bölüm kampüs yurt+ kütüphane laboratuvar amfi derslik+ kantin
öğretim eğitim öğrenim araştırma deney gözlem veri analiz yöntem kuram
örnek+ model ölçü birim sayı rakam oran yüzde toplam fark çarpım kesir
geometri açı üçgen kare daire çember küp silindir
enerji güç+ kuvvet hız ivme kütle hacim yoğunluk+ basınç+ sıcaklık+ derece ölçek+
elektrik+ alan dalga ışın atom molekül element bileşik+ tepkime
yazılım donanım kod sunucu bağlantı kullanıcı uygulama sürüm hata
kayıt~+ yedek+ bellek+ işlemci
öykü kahraman okur yayın basım cilt+ başlık+ dipnot kaynak+ alıntı
sözlük+ ansiklopedi atlas takvim ajanda
komşuluk+ dostluk+ kardeşlik+ arkadaşlık+ misafirlik+
sözleşme anlaşma protokol madde fıkra ek taraf şahit+
üretim tüketim arz talep+ piyasa borsa hisse yatırım zarar bütçe gelir gider
tarım hayvancılık+ sanayi ticaret turizm ulaşım iletişim haberleşme
gazeteci muhabir sunucu spiker kameraman editör
pilot hostes kaptan tayfa makinist kondüktör
çilingir tesisatçı elektrikçi boyacı sıvacı kaynakçı tornacı
çoban bahçıvan bekçi hademe hizmetli kapıcı
dilekçe başvuru form evrak nüsha suret asıl
minder şilte döşek+ ranza beşik+
kibrit çakmak+ mum fener meşale
bıyık+ sakal favori perçem zülüf
düğün nişan kına söz çeyiz damat+ gelin dünür sağdıç+
cenaze mezar mezarlık+ tabut kefen taziye
komisyon kurul meclis senato kongre zirve oturum gündem tutanak+
milyon milyar düzen öğreti önem birey toplum
"""

VERBS = """
yap et ol gel git al ver bul dur kal bil gör öl san vur koş yürü otur kalk yat uyu
uyan bak dinle duy işit söyle konuş sus anlat oku yaz çiz sil boya say hesapla ölç
tart dene dokun tut bırak at fırlat yakala kaç kovala sakla ara kaybet
kazan yen yenil başla bitir sürdür bekle yavaşla hızlan
gir çık in bin uç yüz dal bat yüksel alçal düş dön çevir döndür eğil doğrul uzan
sark salla it çek kaldır indir taşı getir götür gönder yolla ulaş var eriş
aç kapa kapat kilitle ör dik sök tak çıkar giy soyun kuşan
ye iç yut çiğne ısır yala kokla tat pişir kaynat kızart haşla doğra soy dilimle karıştır
çalkala süz dök doldur boşalt ısıt soğut dondur erit
yıka temizle süpür topla düzenle dağıt kirlet lekele kurula kurut ıslat
sev beğen hoşlan kız öfkelen sakinleş sevin üzül ağla gül gülümse
kork ürk utan çekin kıskan özle hatırla unut düşün um
inan güven şüphelen kuşkulan şaşır
öğren öğret çalış çabala uğraş başar becer kavra anla algıla sez hisset
dile iste arzula yalvar buyur yasakla engelle
destekle koru savun sakın kolla gözet
sat kirala öde harca biriktir kazan
çalıştır işlet üret tüket geliştir büyüt küçült artır azalt çoğalt eksilt
sula buda biç ekle böl çarp
kır kırıl yırt yırtıl ez ezil çizil patla patlat sön söndür yan yak tutuş
kana kanat acı acıt sızla iyileş hastalan bayıl ayıl dinlen yorul
evlen boşan nişanlan ayrıl barış küs tartış anlaş uzlaş
doğ büyü yaşlan yaşa
gez dolaş uğra taşın yerleş
seç oyla yönet hükmet
tanı tanış tanıt selamla karşıla uğurla vedalaş kucakla öp okşa
fısılda bağır çağır seslen haykır inle homurdan mırıldan
parla ışılda karar aydınlan aydınlat karart göster gizle belir görün
kaybol oluş
tamamla ertele vazgeç kararlaştır planla tasarla
kıyasla karşılaştır sına denetle incele araştır keşfet
icat yarat oluştur kur yık
kullan uygula yarar yararlan faydalan
izle seyret gözle gözlemle süz
kok kokut terle üşü üşüt ısın
sars titre titret ürper sendele tökezle kay kaydır sürç
oyna zıpla sıçra sek
fethet affet reddet kaydet naklet hallet zannet bahset şükret sabret
kahret hapset adımla bildir yattır
"""

ADJECTIVES = """
iyi kötü güzel çirkin büyük küçük uzun kısa geniş dar yüksek alçak derin sığ kalın ince
ağır hafif sert yumuşak sıcak soğuk ılık serin kuru ıslak temiz kirli yeni eski genç
yaşlı taze bayat hızlı yavaş erken geç kolay zor basit karmaşık açık kapalı dolu boş
ucuz pahalı zengin fakir bol kıt az çok tam eksik doğru yanlış gerçek sahte haklı
haksız güçlü zayıf sağlam çürük canlı cansız diri ölü mutlu mutsuz neşeli üzgün
sevinçli kederli sakin sinirli kızgın öfkeli korkak cesur yürekli çekingen utangaç
akıllı zeki aptal salak çalışkan tembel dikkatli dalgın meraklı ilgisiz kibar kaba
nazik saygılı saygısız dürüst yalancı cömert cimri bencil fedakar sadık vefalı
vefasız kıskanç hoşgörülü anlayışlı inatçı uysal kurnaz saf masum suçlu
tatlı acı ekşi tuzlu yavan lezzetli tok aç susuz doygun
parlak mat saydam şeffaf bulanık berrak aydınlık karanlık loş gölgeli güneşli yağmurlu
karlı rüzgarlı fırtınalı sisli bulutlu
düz eğri yamuk dik yatay dikey paralel çapraz yuvarlak köşeli sivri küt keskin kör
pürüzlü pürüzsüz kaygan yapışkan esnek katı sıvı
yakın uzak bitişik ayrı yerli yabancı üstün
önemli önemsiz gerekli gereksiz zorunlu serbest yasak mümkün imkansız
kesin belirsiz net anlaşılır karışık düzenli dağınık tertipli
sessiz gürültülü hareketli tenha ıssız
hasta sağlıklı yorgun dinç zinde bitkin halsiz güçsüz
meşgul müsait uygun elverişli yetersiz yeterli fazla
modern çağdaş klasik geleneksel yöresel ulusal uluslararası evrensel yerel
resmi özel genel kamusal kişisel ortak tekil çoğul
ana temel esas ikincil öncelikli acil ivedi
mavi kırmızı turuncu eflatun bordo bej haki turkuaz
merhametli elle tutulur aşan büyük üçüncü
"""

INVARIANTS = """
ve veya ama fakat ancak lakin çünkü zira eğer şayet ki de da ile gibi kadar göre doğru
karşı rağmen dolayı ötürü beri önce sonra şimdi hemen derhal yarın bugün dün
öbür şu bu o ben sen biz siz onlar bana sana ona bize size onlara beni seni
onu bizi sizi onları benim senin onun bizim sizin onların bunda şunda onda
bunu şunu buna şuna bunun şunun kendim kendi kendisi kendimiz kendiniz kendileri
kim ne nerede nereye nereden niçin neden niye nasıl hangi hangisi kaç kaçıncı kaça
her hep hepsi tümü bütün tüm bazı kimi çoğu pek epey
oldukça gayet daha en hem hâlâ hala henüz artık yine gene tekrar bir
iki üç dört beş altı yedi sekiz dokuz on yirmi otuz kırk elli altmış yetmiş seksen
doksan yüz bin ilk birinci ikinci üçüncü dördüncü beşinci onuncu sonuncu
yüzüncü yarım çeyrek buçuk tane adet kez kere defa sefer
evet hayır belki tabii elbette kesinlikle asla hiç katiyen muhakkak mutlaka herhalde
galiba sanırım meğer demek yani mesela örneğin ayrıca üstelik hatta bile dahi ise madem
mademki sanki güya adeta resmen aynen tamamen kısmen tamamıyla
aşağı yukarı ileri geri içeri dışarı öte sağa sola öne arkaya üste alta
içeride dışarıda yukarıda aşağıda ileride geride ortada burada şurada orada
buradan şuradan oradan buraya şuraya oraya
sabahleyin akşamleyin geceleyin öğlen öğleden kışın yazın baharda güzün
ardından peşinden önünde arkasında yanında karşısında arasında içinde dışında üzerinde
altında üstünde ortasında kenarında köşesinde etrafında çevresinde boyunca süresince
birlikte beraber yalnız yalnızca sadece salt sırf
keşke inşallah maşallah aferin bravo eyvah yazık vah tüh of öf ah oh ya ha işte
hadi haydi aman sakın lütfen rica buyrun buyurun efendim peki pekala
tamam oldu olur olmaz var yok değil mi mı mu mü
herkes hiçbir hiçbiri hiçbirisi herhangi birtakım birçok birçoğu birkaç biraz
kimse kimsecik herkesin kimsenin şey şeyler şeyi şeye şeyde şeyden
uyurgezer karıncaincitmez çekidüzen başa baştan elele kolkola yanyana üstüste
oysa oysaki halbuki nitekim dolayısıyla böylece böylelikle sonuçta nihayet
sonunda başta önceden sonradan çoktan yeniden aynı farklı başka
diğer öteki beriki deminki demin fazlasıyla
"""


# Locative forms whose stems are not in the seed vocabulary but end in a
# bare vowel + de/da; merged with all generated vowel-final locatives into
# the conjunction-splitting exception lexicon.
EXTRA_LOCATIVE_EXCEPTIONS = """
arada sırada burada şurada orada nerede ortada arkada karada adada
rüyada ovada kayada mağarada tavada modada parada lisede müzede teknede
kulede kafede
"""


def locative_exceptions() -> set[str]:
    tokens = set(EXTRA_LOCATIVE_EXCEPTIONS.split())
    nouns = [Noun(spec) for spec in seeds(NOUNS)]
    stems = [n.stem for n in nouns] + seeds(ADJECTIVES)
    for stem in stems:
        if stem[-1] in ("a", "e"):
            tokens.add(attach(stem, "DA"))
        if stem.endswith(("de", "da")):  # dede itself ends like a fused clitic
            tokens.add(stem)
    # Datives of d-final (or voiced) stems also end in -da/-de: soyada, damada.
    for noun in nouns:
        dative = attach(noun.base(True), "(y)A")
        if dative.endswith(("de", "da")):
            tokens.add(dative)
    return tokens


def seeds(block: str) -> list[str]:
    return [raw for raw in block.split() if raw]


def main() -> None:
    lex = load_lexicons(DATA_DIR / "lexicons")
    forms: set[str] = set()

    for spec in seeds(NOUNS):
        noun = Noun(spec)
        forms |= noun_forms(noun)
        forms |= derived_forms(noun.stem)
    for stem in seeds(VERBS):
        forms |= verb_forms(stem)
    for stem in seeds(ADJECTIVES):
        forms |= adjective_forms(stem)
    forms |= set(seeds(INVARIANTS))

    gazetteer_lower = {
        turkish_lower(line.strip())
        for line in (DATA_DIR / "gazetteer.txt").read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    }

    # Canonical lexicon forms in, single-token error forms out.
    blocked = set(EXPLICIT_TYPOS)
    for _, corrupted, canonical in lex.roundtrip_pairs():
        if " " not in corrupted:
            blocked.add(turkish_lower(corrupted))
        else:
            for tok in tokens_of(corrupted):
                if "'" not in tok and "’" not in tok:
                    forms.add(turkish_lower(tok))
        for tok in tokens_of(canonical):
            if "'" not in tok and "’" not in tok:
                forms.add(turkish_lower(tok))

    # Every surface form of the reference corpus.
    for line in (DATA_DIR / "reference_sentences.txt").read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        for tok in tokens_of(line):
            if "'" in tok or "’" in tok:
                continue
            forms.add(turkish_lower(tok))

    forms -= blocked
    forms -= gazetteer_lower
    forms = {f for f in forms if f and re.fullmatch(r"[a-zçğıöşüâîû]+", f)}

    out = sorted(forms)
    OUT_PATH.write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"wrote {len(out)} forms to {OUT_PATH}")

    exceptions_path = DATA_DIR / "lexicons" / "conj_de_locative_exceptions.tsv"
    exceptions = sorted(locative_exceptions())
    exceptions_path.write_text(
        "# Legitimate locative forms that end in vowel + de/da; never split.\n"
        "# Generated by tools/build_wordlist.py from the seed vocabulary.\n"
        + "\n".join(exceptions)
        + "\n",
        encoding="utf-8",
    )
    print(f"wrote {len(exceptions)} locative exceptions to {exceptions_path}")


if __name__ == "__main__":
    main()
