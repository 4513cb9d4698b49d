"""Regenerates fixtures/bundles.jsonl.

Every question here must parse, round-trip, and pass default validation;
run the workspace test suite after editing.
"""
import json

B = []


def b(id, domain, q, related, canonical, aliases, gender, gold):
    B.append({
        "id": id, "domain": domain, "question": q, "related": related,
        "entity": {"canonical": canonical, "aliases": aliases, "gender_number": gender},
        "gold": gold,
    })


# ---------------- Animal ----------------
b("an-01", "Animal", "what do horses eat in the winter?",
  ["what is the largest horse that is alive?",
   "where does the word horse come from?",
   "what is the collective name for a group of horses?"],
  "horse", ["horse", "the word horse"], "neuter",
  "You may want to know what is the largest horse alive, where the word horse comes from, and what a group of horses is called.")

b("an-02", "Animal", "how long does a corgi usually live?",
  ["how much does a healthy corgi puppy usually cost?",
   "do corgis shed a lot of hair during the summer?",
   "can a corgi run as fast as a bigger dog breed?"],
  "corgi", ["corgi", "a corgi"], "neuter",
  "You might be interested to know how much a healthy corgi puppy costs, whether corgis shed a lot in the summer, and if a corgi can keep up with bigger dogs.")

b("an-03", "Animal", "where do emperor penguins live during the year?",
  ["how many eggs does an emperor penguin lay each season?",
   "can an emperor penguin swim faster than a seal?",
   "why do emperor penguins stand together in the cold?"],
  "emperor penguin", ["emperor penguin", "an emperor penguin"], "neuter",
  "You may want to know how many eggs an emperor penguin lays each season, if it can outswim a seal, or why these birds stand together in the cold.")

b("an-04", "Animal", "how many hearts does an octopus have?",
  ["how many arms does a giant octopus have in total?",
   "can an octopus change the color of its skin quickly?",
   "where do octopuses usually hide from big predators?"],
  "octopus", ["octopus", "an octopus"], "neuter",
  "You can ask how many arms a giant octopus has, whether it can change its skin color quickly, or where octopuses hide from predators.")

b("an-05", "Animal", "can a cheetah run faster than a sports car?",
  ["how far can a cheetah run before it gets tired?",
   "how many cubs does a mother cheetah raise alone?",
   "do cheetahs hunt during the day or at night?"],
  "cheetah", ["cheetah", "a cheetah", "a mother cheetah"], "neuter",
  "You might be interested to know how far a cheetah can run before tiring, how many cubs a mother cheetah raises alone, and whether cheetahs hunt at night.")

b("an-06", "Animal", "what does a hedgehog eat in a garden?",
  ["why does a hedgehog roll itself into a tight ball?",
   "where does a hedgehog sleep during the cold winter?",
   "can a hedgehog swim across a small garden pond?"],
  "hedgehog", ["hedgehog", "a hedgehog"], "neuter",
  "You may want to know why a hedgehog rolls into a ball, where it sleeps in the winter, or if it can swim across a pond.")

b("an-07", "Animal", "how long does a grey parrot usually live?",
  ["how many words can a grey parrot learn to say?",
   "does a grey parrot understand the words it repeats?",
   "why do parrots copy the sounds of human speech?"],
  "grey parrot", ["grey parrot", "a grey parrot"], "neuter",
  "You can ask how many words a grey parrot can learn, whether it understands the words it repeats, or why parrots copy human speech.")

b("an-08", "Animal", "why do sea otters hold hands while they sleep?",
  ["how much food does a sea otter eat every single day?",
   "does a sea otter use a rock to open its shellfish?",
   "where do sea otters rest when the ocean gets rough?"],
  "sea otter", ["sea otter", "a sea otter"], "neuter",
  "You may want to know how much food a sea otter eats in a day, if it uses rocks to open shellfish, and where sea otters rest in rough water.")

b("an-09", "Animal", "how many hours does a koala sleep every day?",
  ["why does a koala sleep for most of the day?",
   "what kind of food does a baby koala eat first?",
   "can a koala climb down from a tall gum tree quickly?"],
  "koala", ["koala", "a koala", "a baby koala"], "neuter",
  "You may want to know why a koala sleeps all day, what a baby koala eats first, and if it can climb down a tall tree quickly.")

b("an-10", "Animal", "can a siberian husky live in a hot climate?",
  ["how much exercise does a siberian husky need every day?",
   "why does a siberian husky howl instead of barking?"],
  "siberian husky", ["siberian husky", "a siberian husky"], "neuter",
  "You can ask how much exercise a siberian husky needs, or why it howls instead of barking.")

# ---------------- Place ----------------
b("pl-01", "Place", "why does Iceland have so many active volcanoes?",
  ["how many people live in Iceland all year round?",
   "when is the best season to visit Iceland for the northern lights?",
   "does Iceland use volcanic heat to warm its homes?"],
  "Iceland", ["Iceland"], "neuter",
  "You may want to know how many people live in Iceland year round, when to visit it for the northern lights, or if it heats homes with volcanic heat.")

b("pl-02", "Place", "when did Mount Fuji erupt for the final time?",
  ["how many climbers reach the top of Mount Fuji each summer?",
   "can you climb Mount Fuji without a local mountain guide?",
   "why is Mount Fuji considered a sacred place in Japan?"],
  "Mount Fuji", ["Mount Fuji", "Fuji"], "neuter",
  "You can ask how many climbers reach the top of Mount Fuji each summer, whether you can climb it without a guide, or why it is sacred in Japan.")

b("pl-03", "Place", "how did the Grand Canyon get its famous shape?",
  ["how many visitors does the Grand Canyon attract every year?",
   "can you ride a mule down into the Grand Canyon safely?",
   "which river runs along the bottom of the Grand Canyon?"],
  "Grand Canyon", ["Grand Canyon", "the Grand Canyon"], "neuter",
  "You may want to know how many visitors the Grand Canyon attracts each year, if you can ride a mule down into it, and which river runs along its bottom.")

b("pl-04", "Place", "why was Venice built on water instead of solid land?",
  ["how many canals does Venice have inside the historic old town?",
   "is Venice slowly sinking into the lagoon every single year?"],
  "Venice", ["Venice"], "neuter",
  "You might be interested to know how many canals Venice has in the old town, and whether it is slowly sinking into the lagoon.")

b("pl-05", "Place", "how much sand does the Sahara desert move in one storm?",
  ["how long does it take to cross the Sahara desert by camel?",
   "was the Sahara once a fertile green land full of lakes?",
   "does the Sahara ever get heavy winter snow?"],
  "Sahara", ["Sahara", "the Sahara", "the Sahara desert"], "neuter",
  "You may want to know how long it takes to cross the Sahara desert by camel, if it was once green and full of lakes, or whether it ever gets snow.")

b("pl-06", "Place", "how many wolves live inside Yellowstone national park today?",
  ["how many bison roam freely across Yellowstone every season?",
   "can you see wild wolves hunt inside Yellowstone in winter?",
   "why does Yellowstone sit on top of a giant sleeping volcano?"],
  "Yellowstone", ["Yellowstone"], "neuter",
  "You can ask how many bison roam across Yellowstone every season, if you can watch wolves hunt there in winter, and why it sits on a sleeping volcano.")

b("pl-07", "Place", "why was Kyoto spared from bombing during the war?",
  ["how many ancient temples does Kyoto still have today?",
   "was Kyoto the capital of Japan before Tokyo took over?",
   "which season brings the most tourists to Kyoto for photos?"],
  "Kyoto", ["Kyoto"], "neuter",
  "You may want to know how many ancient temples Kyoto still has, whether it was the capital of Japan before Tokyo, or which season brings the most tourists.")

b("pl-08", "Place", "does Lake Baikal hold the most fresh water on earth?",
  ["how old is Lake Baikal compared to other great lakes?",
   "how many unique animal species swim in Lake Baikal today?",
   "can Lake Baikal freeze so hard that trucks drive across?"],
  "Lake Baikal", ["Lake Baikal", "Baikal"], "neuter",
  "You might be interested to know how old Lake Baikal is, how many unique species swim in it, or whether it freezes hard enough to drive across.")

b("pl-09", "Place", "which famous architect shaped the look of Barcelona?",
  ["how many tourists visit Barcelona during the summer months?",
   "why did Barcelona build such a strange unfinished cathedral?"],
  "Barcelona", ["Barcelona"], "neuter",
  "You can ask how many tourists visit Barcelona in the summer, or why it built such a strange unfinished cathedral.")

# ---------------- Technology ----------------
b("te-01", "Technology", "how do i reset my iphone without losing all my photos?",
  ["how many times can i enter a wrong passcode on my iphone?",
   "can i unlock my iphone even if i am still paying for it?",
   "why does my iphone suddenly show a black half moon icon?"],
  "iPhone", ["iPhone", "iphone", "my iphone", "your iphone"], "neuter",
  "You may want to know how many times you can enter a wrong passcode on your iphone, or if you can unlock it even if you are still paying for it, or why it shows a half moon icon.")

b("te-02", "Technology", "why does my bluetooth speaker keep losing its connection?",
  ["how far does a normal bluetooth signal reach indoors?",
   "can bluetooth connect two phones to one speaker at once?",
   "does bluetooth drain the battery of an older phone quickly?"],
  "bluetooth", ["bluetooth"], "neuter",
  "You can ask how far a normal bluetooth signal reaches indoors, if it can connect two phones to one speaker, or whether it drains an older phone battery.")

b("te-03", "Technology", "how do i move all my photos to a new android phone?",
  ["why does an android phone slow down after a big update?",
   "can an android phone catch a virus from a web page?",
   "how long does an android phone get security updates for?"],
  "android phone", ["android phone", "an android phone", "a new android phone"], "neuter",
  "You may want to know why an android phone slows down after a big update, if it can catch a virus from a web page, and how long it gets security updates.")

b("te-04", "Technology", "can i run linux on a very old laptop from 2010?",
  ["why do so many web servers run linux instead of windows?",
   "is linux really free for both home and business use?",
   "can a complete beginner learn linux in a few weeks?"],
  "linux", ["linux"], "neuter",
  "You might be interested to know why so many web servers run linux, whether it is really free for business use, or if a beginner can learn it in weeks.")

b("te-05", "Technology", "how does Bitcoin actually work behind the scenes?",
  ["how much electricity does Bitcoin mining use every year?",
   "can Bitcoin ever be traced back to a real person?",
   "why does the price of Bitcoin jump around so wildly?"],
  "Bitcoin", ["Bitcoin"], "neuter",
  "You may want to know how much electricity Bitcoin mining uses every year, if it can ever be traced to a real person, or why its price jumps around.")

b("te-06", "Technology", "do i need a license to fly a small drone in the city?",
  ["how long does the battery of a drone last on one charge?",
   "how far can a small camera drone fly from its pilot?",
   "can a drone carry a heavy package across a whole town?"],
  "drone", ["drone", "a drone", "a small camera drone"], "neuter",
  "You can ask how long the battery of a drone lasts on one charge, how far it can fly from its pilot, or if it can carry a heavy package across town.")

b("te-07", "Technology", "do home solar panels still work on a grey cloudy day?",
  ["how much money does a home solar panel save in one year?",
   "how long does a solar panel keep making power before it dies?"],
  "solar panel", ["solar panel", "a solar panel", "a home solar panel"], "neuter",
  "You may want to know how much money a home solar panel saves in a year, and how long it keeps making power before it dies.")

b("te-08", "Technology", "can you ride an electric scooter legally on the sidewalk?",
  ["how much does a good electric scooter cost these days?",
   "how far does an electric scooter go on one full charge?",
   "do electric scooters work well in heavy winter rain?"],
  "electric scooter", ["electric scooter", "an electric scooter", "a good electric scooter"], "neuter",
  "You might be interested to know how much a good electric scooter costs, how far it goes on one charge, and whether electric scooters work in the rain.")

# ---------------- Politician ----------------
b("po-01", "Politician", "who was Samuel Adams in the American Revolution?",
  ["did Samuel Adams plan the Boston Tea Party?",
   "what was the role of Samuel Adams in the American Revolution?",
   "did Samuel Adams help write the Articles of Confederation?"],
  "Samuel Adams", ["Samuel Adams", "Sam Adams"], "masculine",
  "You may also want to know if Sam Adams planned the Boston Tea Party, or about his role in the American Revolution, or whether he helped write the Articles of Confederation.")

b("po-02", "Politician", "where was Abraham Lincoln born and raised as a child?",
  ["how many years did Abraham Lincoln serve as president?",
   "did Abraham Lincoln write his famous speech on a train ride?",
   "which political party did Abraham Lincoln belong to at first?"],
  "Abraham Lincoln", ["Abraham Lincoln", "Lincoln"], "masculine",
  "You may want to know how many years Abraham Lincoln served as president, if he wrote his famous speech on a train, or which party he belonged to first.")

b("po-03", "Politician", "when did Winston Churchill become prime minister of Britain?",
  ["how many books did Winston Churchill write about the war?",
   "did Winston Churchill win the Nobel Prize for his writing?",
   "what did Winston Churchill paint when he needed a quiet rest?"],
  "Winston Churchill", ["Winston Churchill", "Churchill"], "masculine",
  "You can ask how many books Winston Churchill wrote about the war, whether he won the Nobel Prize for writing, and what he painted when resting.")

b("po-04", "Politician", "how long was Angela Merkel the leader of Germany?",
  ["what did Angela Merkel study before she entered politics?",
   "how many elections did Angela Merkel win in a row?",
   "did Angela Merkel grow up on the eastern side of the wall?"],
  "Angela Merkel", ["Angela Merkel", "Merkel"], "feminine",
  "You may want to know what Angela Merkel studied before politics, how many elections she won in a row, or if she grew up east of the wall.")

b("po-05", "Politician", "how many years did Nelson Mandela spend in prison?",
  ["what did Nelson Mandela do right after leaving prison?",
   "how long did Nelson Mandela lead the new South Africa?",
   "did Nelson Mandela share his prize with another leader?"],
  "Nelson Mandela", ["Nelson Mandela", "Mandela"], "masculine",
  "You might be interested to know what Nelson Mandela did right after leaving prison, how long he led the new South Africa, and if he shared his prize.")

b("po-06", "Politician", "why did Jacinda Ardern step down as prime minister?",
  ["how old was Jacinda Ardern when she took the top job?",
   "did Jacinda Ardern bring her baby into a world meeting?"],
  "Jacinda Ardern", ["Jacinda Ardern", "Ardern"], "feminine",
  "You can ask how old Jacinda Ardern was when she took the top job, or if she brought her baby into a world meeting.")

b("po-07", "Politician", "what did Theodore Roosevelt do before he became president?",
  ["how many national parks did Theodore Roosevelt help create?",
   "did Theodore Roosevelt keep a pet bear inside the white house?",
   "did Theodore Roosevelt win a medal for his time in the army?"],
  "Theodore Roosevelt", ["Theodore Roosevelt", "Roosevelt", "Teddy Roosevelt"], "masculine",
  "You may want to know how many national parks Theodore Roosevelt helped create, if he kept a pet bear in the white house, or whether he won an army medal.")

# ---------------- Food ----------------
b("fo-01", "Food", "what does the word sushi actually mean in Japanese?",
  ["how long does fresh sushi stay safe in the fridge?",
   "can you eat sushi safely during the hot summer months?",
   "why does sushi cost so much at a real restaurant?"],
  "sushi", ["sushi"], "neuter",
  "You may want to know how long fresh sushi stays safe in the fridge, if you can eat it in the summer, or why it costs so much at a restaurant.")

b("fo-02", "Food", "can a small piece of dark chocolate help my heart?",
  ["why does dark chocolate taste bitter compared to milk chocolate?",
   "can dark chocolate keep fresh for a whole year in a cupboard?",
   "does dark chocolate really have less sugar than milk candy?"],
  "dark chocolate", ["dark chocolate"], "neuter",
  "You can ask why dark chocolate tastes bitter compared to milk chocolate, if it keeps fresh for a year, or whether it really has less sugar.")

b("fo-03", "Food", "how long does homemade kimchi last in a sealed jar?",
  ["why does kimchi smell so strong when the jar first opens?",
   "can kimchi help my stomach stay healthy over the winter?",
   "does kimchi keep its health power after hot cooking?"],
  "kimchi", ["kimchi"], "neuter",
  "You may want to know why kimchi smells so strong, if it can help your stomach stay healthy, and whether it keeps its health power after cooking.")

b("fo-04", "Food", "why does sourdough bread stay fresh longer than white bread?",
  ["how long does sourdough bread stay good on the counter?",
   "can sourdough bread help people who struggle with sugar?",
   "does sourdough bread need real yeast from a shop to rise?"],
  "sourdough bread", ["sourdough bread"], "neuter",
  "You might be interested to know how long sourdough bread stays good on the counter, if it can help people who struggle with sugar, or whether it needs shop yeast.")

b("fo-05", "Food", "can cheap olive oil from the shop still be the real thing?",
  ["how much olive oil does a healthy person need every day?",
   "why does good olive oil burn my throat a little bit?",
   "does real olive oil freeze when the kitchen gets cold?"],
  "olive oil", ["olive oil", "good olive oil", "real olive oil"], "neuter",
  "You may want to know how much olive oil a healthy person needs each day, why it burns your throat a little, or if it freezes in a cold kitchen.")

b("fo-06", "Food", "why does fresh ramen taste better than the instant kind?",
  ["how long does real ramen broth cook before it tastes right?",
   "can you make good ramen at home without special tools?"],
  "ramen", ["ramen", "good ramen"], "neuter",
  "You can ask how long real ramen broth cooks before it tastes right, or whether you can make it at home without special tools.")

b("fo-07", "Food", "why does raw honey never go bad in the jar?",
  ["how do bees turn flower nectar into thick sweet honey?",
   "can honey really help a sore throat during a bad cold?",
   "does honey change color when bees visit different flowers?"],
  "honey", ["honey"], "neuter",
  "You may want to know how bees turn nectar into honey, if it can really help a sore throat, and why it changes color with different flowers.")

# ---------------- Athlete ----------------
b("at-01", "Athlete", "who is Cristiano Ronaldo and why is he so famous?",
  ["how much money does Cristiano Ronaldo earn?",
   "how many children does Cristiano Ronaldo have?",
   "who is the mother of Cristiano Ronaldos child?"],
  "Cristiano Ronaldo", ["Cristiano Ronaldo", "Ronaldo"], "masculine",
  "You may want to know how much money Cristiano Ronaldo earns, or how many children he has, or who is the mother of his child.")

b("at-02", "Athlete", "how many grand slams did Serena Williams win in her career?",
  ["how old was Serena Williams when she won her first title?",
   "did Serena Williams keep playing after her baby was born?",
   "who taught Serena Williams how to play tennis as a child?"],
  "Serena Williams", ["Serena Williams", "Serena"], "feminine",
  "You can ask how old Serena Williams was when she won her first title, if she kept playing after her baby was born, or who taught her tennis as a child.")

b("at-03", "Athlete", "has Lionel Messi won a World Cup with Argentina?",
  ["how many goals has Lionel Messi scored for his country so far?",
   "did Lionel Messi leave his boyhood club for Paris?",
   "is Lionel Messi the greatest player of all time?"],
  "Lionel Messi", ["Lionel Messi", "Messi"], "masculine",
  "You may want to know how many goals Lionel Messi has scored for his country, if he left his boyhood club for Paris, or whether he is the greatest ever.")

b("at-04", "Athlete", "how many medals did Simone Biles bring home from the games?",
  ["how many new skills did Simone Biles invent in her sport?",
   "why did Simone Biles stop competing for a while in Tokyo?",
   "did Simone Biles come back stronger after her break?"],
  "Simone Biles", ["Simone Biles", "Biles"], "feminine",
  "You might be interested to know how many new skills Simone Biles invented, why she stopped competing for a while in Tokyo, and if she came back stronger.")

b("at-05", "Athlete", "how did Usain Bolt become the fastest man alive?",
  ["how many world records does Usain Bolt still hold today?",
   "did Usain Bolt eat chicken nuggets before his big races?",
   "what does Usain Bolt do now that he no longer runs?"],
  "Usain Bolt", ["Usain Bolt", "Bolt"], "masculine",
  "You can ask how many world records Usain Bolt still holds, if he ate chicken nuggets before races, or what he does now that he no longer runs.")

b("at-06", "Athlete", "when did Roger Federer finally retire from tennis?",
  ["how many major titles did Roger Federer win on grass courts?",
   "did Roger Federer play his last match with his old rival?"],
  "Roger Federer", ["Roger Federer", "Federer"], "masculine",
  "You may want to know how many major titles Roger Federer won on grass, or if he played his last match with his old rival.")

# ---------------- Wearables ----------------
b("we-01", "Wearables", "why do my airpods keep falling out when i run?",
  ["how long do new airpods play music on one full charge?",
   "can airpods survive a quick trip through the washing machine?",
   "do airpods work well with an android phone on the bus?"],
  "AirPods", ["AirPods", "airpods", "new airpods", "my airpods", "your airpods"], "plural",
  "You may want to know how long new airpods play music on one charge, if they can survive the washing machine, and whether they work with android phones.")

b("we-02", "Wearables", "can an apple watch really call for help if i fall down?",
  ["how long does an apple watch battery last on a busy day?",
   "can an apple watch measure my heart rate while i sleep?",
   "does an apple watch still work far away from my phone?"],
  "Apple Watch", ["Apple Watch", "apple watch", "an apple watch"], "neuter",
  "You can ask how long an apple watch battery lasts on a busy day, if it can measure your heart rate while you sleep, or whether it works far from your phone.")

b("we-03", "Wearables", "does a fitbit count steps even on a treadmill?",
  ["how does a fitbit know when i actually fall asleep?",
   "can a fitbit track a swim in the pool without breaking?",
   "does a fitbit need its own internet plan to work right?"],
  "fitbit", ["fitbit", "a fitbit"], "neuter",
  "You may want to know how a fitbit knows when you fall asleep, if it can track a swim in the pool, and whether it needs its own internet plan.")

b("we-04", "Wearables", "can a smart ring track my sleep better than a watch?",
  ["how long does a smart ring run before it needs a charge?",
   "can a smart ring measure stress through my finger?",
   "does a smart ring beat a wrist band for tracking sleep?"],
  "smart ring", ["smart ring", "a smart ring"], "neuter",
  "You might be interested to know how long a smart ring runs before it needs a charge, if it can measure stress through your finger, or whether it beats a wrist band.")

b("we-05", "Wearables", "why does a vr headset make some people feel dizzy?",
  ["how much does a good vr headset cost for home gaming?",
   "can a vr headset hurt my eyes after a long night of play?"],
  "vr headset", ["vr headset", "a vr headset", "a good vr headset"], "neuter",
  "You can ask how much a good vr headset costs for home gaming, or if it can hurt your eyes after a long night of play.")

# ---------------- Holiday ----------------
b("ho-01", "Holiday", "why do people light so many small lamps during Diwali?",
  ["how many days does the Diwali festival last in India?",
   "does Diwali fall on a different date every single year?",
   "can a tourist join the celebrations during Diwali in India?"],
  "Diwali", ["Diwali", "the Diwali festival"], "neuter",
  "You may want to know how many days the Diwali festival lasts in India, if it falls on a different date each year, or whether a tourist can join the celebrations.")

b("ho-02", "Holiday", "where did the Halloween tradition originally come from?",
  ["how much candy does an American family buy for Halloween?",
   "why does Halloween make pumpkin carving so popular?",
   "do dogs wear funny costumes during Halloween in America?"],
  "Halloween", ["Halloween"], "neuter",
  "You can ask how much candy an American family buys for Halloween, why it makes pumpkin carving so popular, or if dogs wear costumes during it too.")

b("ho-03", "Holiday", "how many candles does a family light during Hanukkah?",
  ["how many nights does the Hanukkah celebration go on for?",
   "why does Hanukkah move around the calendar every year?",
   "do families eat special fried food during Hanukkah at home?"],
  "Hanukkah", ["Hanukkah", "the Hanukkah celebration"], "neuter",
  "You may want to know how many nights the Hanukkah celebration goes on, why it moves around the calendar, and what special food families eat at home.")

b("ho-04", "Holiday", "why do americans eat turkey on Thanksgiving every year?",
  ["how many turkeys do American families cook for Thanksgiving?",
   "did Thanksgiving start as a harvest festival long ago?"],
  "Thanksgiving", ["Thanksgiving"], "neuter",
  "You might be interested to know how many turkeys American families cook for Thanksgiving, or if it started as a harvest festival long ago.")

# ---------------- Video Game ----------------
b("vg-01", "Video Game", "why is Minecraft still so popular after all these years?",
  ["how many players has Minecraft attracted around the whole world?",
   "can you play Minecraft together with a friend far away?",
   "does Minecraft teach children real skills for school?"],
  "Minecraft", ["Minecraft"], "neuter",
  "You may want to know how many players Minecraft has attracted around the world, if you can play it with a friend far away, or whether it teaches real skills.")

b("vg-02", "Video Game", "who invented Tetris and where did the idea come from?",
  ["why does Tetris calm the mind after a stressful day?",
   "can you ever finish a whole game of Tetris completely?",
   "does Tetris still run on a phone from twenty years ago?"],
  "Tetris", ["Tetris"], "neuter",
  "You can ask why Tetris calms the mind after a stressful day, whether you can ever finish a whole game of it, or if it still runs on an old phone.")

b("vg-03", "Video Game", "which pokemon game sold the most copies in history?",
  ["how many pokemon can a player catch in the newest game?",
   "does pokemon help children learn to read maps and plan trips?",
   "why do grown adults still play pokemon on the train to work?"],
  "pokemon", ["pokemon"], "neuter",
  "You may want to know how many pokemon a player can catch in the newest game, if it helps children learn map reading, or why grown adults still play it on the train.")

b("vg-04", "Video Game", "why do zelda games always cost full price for years?",
  ["how long does the newest zelda game take to finish fully?",
   "can you play zelda without following the main story at all?"],
  "zelda", ["zelda"], "neuter",
  "You can ask how long the newest zelda game takes to finish, or whether you can play it without following the main story.")

with open("fixtures/bundles.jsonl", "w") as f:
    for rec in B:
        f.write(json.dumps(rec, ensure_ascii=False) + "\n")

n_q = sum(1 + len(r["related"]) for r in B)
n_rel = [len(r["related"]) for r in B]
print(f"{len(B)} bundles, {n_q} questions, related dist: 2x{n_rel.count(2)} 3x{n_rel.count(3)}")
sums = [sum(len(t) for t in r["related"]) for r in B]
print("related char sums: min", min(sums), "max", max(sums))
for r in B:
    s = sum(len(t) for t in r["related"])
    n = len(r["related"])
    tb = s + (21 + 9 if n == 3 else (21 + 4 if n == 2 else 21)) - n + 1
    if tb > 1.25 * s:
        print("MAXLEN RISK", r["id"], "sum", s, "tb~", tb, "bound", 1.25 * s)
