#!/usr/bin/env python3
# Copyright 2026 The namematch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/lexicon.tsv.

The lexicon is a curated list of common Indian given names and family names
(drawn from widely published name lists), expanded with productive compound
patterns (devotional compounds, Punjabi prefix+suffix given names) and with
deterministic transliteration spelling variants (sh/s, ee/i, u/oo, th/t).

Output format, one entry per line:  name<TAB>class<TAB>weight
with class in {first, surname, middle_marker}.

Run from the repository root:
    python3 scripts/gen_lexicon.py > data/lexicon.tsv
"""

import sys

FIRST_NAMES = """
aarav abhay abhinav abhishek aditya ajay akash akhil alok aman amar amit
amitabh amol anand anil anirudh ankit ankur anuj anupam arjun arnav arun
arvind ashish ashok atul avinash ayush balram bharat bhaskar bhavesh brijesh
chandan chetan chirag daksh deepak dev devendra dhananjay dhruv dilip dinesh
gagan gaurav gautam girish gopal govind harish hemant hitesh inder ishaan
jagdish jai jatin jayant jitendra kailash kamal kapil karan kartik kishan
kishore krishna kunal lakshman lalit lokesh madan madhav mahesh manish manoj
mayank mohan mohit mukesh mukul naman nandan narendra naresh naveen navin
nikhil nilesh nishant nitin om pankaj parag paras pawan piyush prabhat
pradeep prakash pramod pranav prashant praveen prem puneet rahul raj rajat
rajeev rajendra rajesh rajiv rakesh ram raman ramesh ranjan ratan ravi
ravindra rishabh rishi ritesh rohan rohit sachin sagar sahil sameer sandeep
sanjay sanjeev santosh sarvesh satish saurabh shailesh shankar shantanu
sharad shashank shashi shiv shivam shubham siddharth sohan subhash sudhir
sumit sunil suraj suresh sushil tarun tejas tushar uday udit umesh utkarsh
vaibhav varun vasant ved vijay vikas vikram vimal vinay vinod vipin viraj
vishal vishnu vivek yash yogesh
aarti aditi aishwarya akanksha alka amrita anita anjali ankita anshika anu
anuradha anushka aparna archana arpita asha babita bhavna chhaya damini
deepa deepika devika divya durga ekta gauri gayatri geeta gita hema indira
ishita jaya jyoti kajal kalpana kamala kanchan kavita kiran komal kriti
lakshmi lata leela madhu madhuri mamta manju maya meena meera megha mira
mohini mona nalini namrata nandini neelam neha nidhi nikita nirmala nisha
nitya padma pallavi parvati payal pooja poonam prachi pragya preeti priya
priyanka pushpa rachna radha ragini rajni rakhi rani rashmi rekha renu richa
rita ritika riya roshni rukmini rupa sadhana sakshi saloni sandhya sangeeta
sanjana sapna sarika sarla saroj savita seema shalini shanti sharda sheela
shikha shilpa shobha shraddha shreya shweta simran sita smita sneha sonal
sonia sudha sujata suman sumitra sunita supriya sushma swati tanvi tanya
tara trisha uma urmila usha vandana vani varsha vidya vimala vinita
bala balaji chandran dhanush ganesh hari karthik kannan karthikeyan kumar
madhavan mahadevan mani manikandan murali muthu narayanan prabhu raghavan
raghu rajan ramanathan ramaswamy ranganathan sankaran saravanan selvam
senthil sivakumar srinivas srinivasan subramaniam sundar vasudevan venkat
venkatesh vijayan vignesh
ambika bhavani chitra janaki kamakshi kaveri lalitha malathi meenakshi
padmini parvathi revathi rukmani saraswathi shanthi sharada vasantha
vasundhara vijaya
abir amitava anirban arnab aritra arup asit avik bikash biman bimal biplab
bishnu biswajit debashish dibakar dipankar indrajit joydeep kallol kaushik
koushik manas mrinal nirmal palash partha prabir pranab prasanta rabindra
rajib ranjit sandip sanjib santanu saptarshi somnath soumen soumitra sourav
subir subrata sudip sujit sukanta sukumar supratim susanta swapan tapan
tapas uttam
aparajita bidisha dipa ipsita kakoli madhumita mallika moushumi paromita
rituparna sharmila sucharita sudeshna sutapa tanushree
ajit aniket bhushan chinmay dhaval harshad hiren jayesh jignesh kalpesh
kamlesh ketan kirit mahendra mandar maulik mehul milind mitesh ninad nirav
omkar parth prafull prasad pratap pritesh sandesh sanket shailendra shreyas
swapnil vinayak vishwas
asmita bhakti falguni harsha hetal jagruti jigna ketki manisha minal mrunal
nayana prajakta pranjal rohini rucha rupali sheetal snehal tejal trupti
vaishali vrushali
aamir abdul adil afzal ahmad ahmed akbar akram ali altaf amjad anwar arif
arshad asif aslam ayaan azhar aziz bashir bilal danish faisal farhan feroz
firoz ghulam gulzar habib hamid hanif haroon hasan hassan hussain ibrahim
idris iftikhar imran imtiaz iqbal irfan irshad ismail jamal javed junaid
kabir kamran karim khalid mahmood majid mansoor maqsood mehboob mohammad
mohammed mohd moin mubarak mukhtar mumtaz munir murtaza mushtaq muzaffar
nadeem nasir naushad nawaz nazir noor parvez qamar rafiq rahim rahman rashid
raza rehan riyaz rizwan sabir sadiq saeed saif sajid salim salman sarfaraz
shabbir shafiq shahbaz shahid shahrukh shakeel shamim sharif shaukat shoaib
sikandar sohail sultan tanveer tariq umar usman wasim yakub yasin yasir
yousuf yunus yusuf zafar zahid zakir zubair
afreen amina ayesha farah farzana fatima hasina heena kausar khadija nafisa
nagma naseem nasreen nazia nikhat nilofer parveen rabia rehana reshma
rukhsana sabina saira salma samina sana shabana shabnam shagufta shahin
shaista shakila shazia sultana tabassum tarannum yasmin zarina zeenat zoya
"""

SURNAMES = """
agarwal aggarwal agrawal ahuja arora awasthi bajaj bajpai bakshi bansal bedi
bhalla bhandari bharadwaj bhardwaj bhargava bhasin bhatia bhatnagar bhatt
birla chadha chaturvedi chauhan chawla chopra dewan dhawan dhingra dixit
dubey duggal dwivedi gandhi garg gill goel goyal grover gupta jain jaiswal
jindal joshi juneja kalra kapoor kapur kashyap kaul khanna khandelwal khosla
khurana kohli luthra mahajan maheshwari malhotra malik mathur mehra mehrotra
mehta mishra misra mittal modi nanda narang nigam oberoi ojha pandey pandit
pathak puri raina rastogi sachdeva saini saxena sehgal sethi sharma shukla
singhal sinha sood srivastava suri talwar tandon taneja tewari thakur tiwari
tomar trivedi tripathi tyagi upadhyay verma vohra wadhwa walia yadav
apte bhagat bhave chavan desai deshmukh deshpande gadgil gaikwad godbole
gokhale jadhav kadam kale kamat kamble karnik kelkar khare kulkarni mane
more naik pawar patankar patil phadke ranade rane raut sawant shinde
tendulkar wagh amin dave jani kapadia lakhani parekh parikh rawal sanghvi
shah sheth solanki soni thakkar vyas vora bhavsar chokshi gajjar zaveri
acharya balakrishnan balasubramanian chandrasekhar chandrasekaran ganesan
gopalakrishnan gounder hegde iyer iyengar jagannathan kamath krishnamurthy
krishnan menon moorthy murthy mudaliar nadar nagarajan nair nambiar
natarajan padmanabhan pillai rajagopalan ramachandran ramakrishnan raman
ramanujam rangarajan rao reddy sankaran sastry shastri shenoy subramanian
sundaram swaminathan venkataraman venkatesan vishwanathan naidu shetty pai
bhat prabhu kurup
adhikari banerjee basu bhattacharya bhattacharjee bhowmik biswas bose
chakrabarti chakraborty chatterjee choudhury chowdhury das dasgupta datta
de deb dey dutta ganguly ghosh guha haldar kar karmakar kundu majumdar
mandal mitra mondal mukherjee nag pal paul poddar ray roy saha samanta
sanyal sarkar sen sengupta
ahluwalia bains bajwa bhullar brar cheema chhabra dhaliwal dhillon grewal
kang mann randhawa sandhu sekhon sidhu virk aulakh kahlon sohal toor
ansari baig khan mirza pathan qureshi sayed shaikh sheikh siddiqui syed
kumar singh prasad nath chaudhary chaudhari chowdhary rawat negi bisht pant
chand thapa rai gurung devi lal
"""

MIDDLE_MARKERS = """
kumar kumari lal singh devi prasad chandra chand nath rani bai dev das ram
mohan kishore kant raj dutt kaur bahadur bhushan shankar narayan prakash
"""

# Devotional compound given names: root + suffix, both drawn from living
# naming patterns (Ramprasad, Brijmohan, Dayashankar, ...).
COMPOUND_ROOTS = [
    "ram", "shiv", "hari", "krishna", "raj", "dev", "brij", "prem", "daya",
    "gopal", "moti", "shyam", "jai", "durga", "ganga", "kishan", "madan",
    "sohan", "tara", "amar", "anand", "jag", "vish", "bhola", "kanhaiya",
]
COMPOUND_SUFFIXES = [
    "kumar", "prasad", "nath", "chandra", "chand", "pal", "das", "lal",
    "mohan", "kishore", "narayan", "shankar", "swaroop", "dhar", "babu",
]

# Punjabi given names are productively built from a fixed prefix+suffix
# system (Gurpreet, Sukhwinder, Baljit, ...).
PUNJABI_PREFIXES = [
    "aman", "amar", "bal", "bhup", "charan", "dal", "gur", "har", "jag",
    "jas", "karam", "kul", "lakh", "man", "nav", "param", "prabh", "ran",
    "sat", "sukh", "swaran", "tejin",
]
PUNJABI_SUFFIXES = [
    "deep", "preet", "jit", "jeet", "inder", "winder", "meet", "pal",
    "want", "veer", "jot", "dev",
]


def split_names(block: str):
    seen = []
    have = set()
    for tok in block.split():
        if tok not in have:
            have.add(tok)
            seen.append(tok)
    return seen


def spelling_variants(name: str):
    """Deterministic transliteration respellings, one rule application each."""
    out = []
    if "sh" in name:
        out.append(name.replace("sh", "s", 1))
    if "ee" in name:
        out.append(name.replace("ee", "i", 1))
    else:
        # last "i" with a consonant on each side -> "ee"
        for i in range(len(name) - 2, 0, -1):
            if name[i] == "i" and name[i - 1] not in "aeiou" and name[i + 1] not in "aeiou":
                out.append(name[:i] + "ee" + name[i + 1 :])
                break
    if "oo" in name:
        out.append(name.replace("oo", "u", 1))
    else:
        for i in range(1, len(name) - 1):
            if name[i] == "u" and name[i - 1] not in "aeiou" and name[i + 1] not in "aeiou":
                out.append(name[:i] + "oo" + name[i + 1 :])
                break
    if "th" in name:
        out.append(name.replace("th", "t", 1))
    return [v for v in out if len(v) >= 3 and v != name]


def main():
    firsts = split_names(FIRST_NAMES)
    surnames = split_names(SURNAMES)
    markers = split_names(MIDDLE_MARKERS)

    for root in COMPOUND_ROOTS:
        for suf in COMPOUND_SUFFIXES:
            if root == suf or root.endswith(suf[0]):
                continue
            c = root + suf
            if c not in firsts:
                firsts.append(c)
    for pre in PUNJABI_PREFIXES:
        for suf in PUNJABI_SUFFIXES:
            if pre[-1] == suf[0]:
                continue
            c = pre + suf
            if c not in firsts:
                firsts.append(c)

    rows = []

    def add_class(names, cls, base, variant_scale):
        emitted = set()
        rank = 0
        for n in names:
            if (n, cls) in emitted:
                continue
            w = max(1.0, base / (rank + 8) ** 0.55)
            rows.append((n, cls, round(w, 3)))
            emitted.add((n, cls))
            rank += 1
            for v in spelling_variants(n):
                if (v, cls) not in emitted and v not in names:
                    rows.append((v, cls, round(max(1.0, w * variant_scale), 3)))
                    emitted.add((v, cls))

    add_class(firsts, "first", 400.0, 0.3)
    add_class(surnames, "surname", 400.0, 0.3)
    for m in markers:
        rows.append((m, "middle_marker", 1.0))

    out = sys.stdout
    out.write("# Generated by scripts/gen_lexicon.py -- do not edit by hand.\n")
    out.write("# name<TAB>class<TAB>weight, class in {first, surname, middle_marker}\n")
    for name, cls, w in rows:
        out.write(f"{name}\t{cls}\t{w}\n")


if __name__ == "__main__":
    main()
